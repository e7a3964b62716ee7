#include "latt/cholesky.hpp"

#include "latt/errors.hpp"

namespace latt {

RationalCholesky cholesky_rational(const MatQ& g) {
    int n = static_cast<int>(g.size());
    MatQ m = g;
    RationalCholesky out;
    out.h.resize(n);
    out.c.assign(n, VecQ(n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        if (sgn(m[i][i]) <= 0)
            throw NotPositiveDefinite("Cholesky pivot <= 0 at index " + std::to_string(i));
        out.h[i] = m[i][i];
        for (int j = i + 1; j < n; ++j) out.c[i][j] = m[i][j] / m[i][i];
        for (int k = i + 1; k < n; ++k)
            for (int l = k; l < n; ++l) {
                m[k][l] -= out.c[i][k] * m[i][l];
                if (l != k) m[l][k] = m[k][l];
            }
    }
    return out;
}

RationalCholesky cholesky(const GramMatrix& g) {
    int n = g.rank();
    MatQ m(n, VecQ(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = Rat(g.at(i, j));
    return cholesky_rational(m);
}

} // namespace latt
