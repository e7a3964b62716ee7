#include "latt/linalg.hpp"

#include <algorithm>

#include "latt/errors.hpp"

namespace latt {

MatZ matz_identity(int n) {
    MatZ m(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

MatZ matz_mul(const MatZ& a, const MatZ& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    MatZ out(n, std::vector<Int>(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

MatZ matz_transpose(const MatZ& a) {
    size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
    MatZ out(m, std::vector<Int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) out[j][i] = a[i][j];
    return out;
}

MatZ matz_congruence(const MatZ& g, const MatZ& a) {
    return matz_mul(matz_transpose(a), matz_mul(g, a));
}

Int det_bareiss(MatZ m) {
    size_t n = m.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

MatZ hnf_rows(const MatZ& input) {
    MatZ m = input;
    size_t rows = m.size();
    if (rows == 0) return {};
    size_t cols = m[0].size();
    size_t r = 0; // next pivot row
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // clear column c below row r with gcd steps
        for (size_t i = r + 1; i < rows; ++i) {
            while (m[i][c] != 0) {
                if (m[r][c] == 0) {
                    std::swap(m[r], m[i]);
                    continue;
                }
                Int q = floor_div(m[i][c], m[r][c]);
                for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
                if (m[i][c] != 0) std::swap(m[r], m[i]);
            }
        }
        if (m[r][c] == 0) continue;
        if (m[r][c] < 0)
            for (size_t j = 0; j < cols; ++j) m[r][j] = -m[r][j];
        // reduce entries above the pivot
        for (size_t i = 0; i < r; ++i) {
            Int q = floor_div(m[i][c], m[r][c]);
            if (q != 0)
                for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
        }
        ++r;
    }
    m.resize(r);
    return m;
}

std::optional<std::vector<Int>> solve_left_int(const MatZ& basis, const std::vector<Int>& v) {
    // back-substitute against the echelon structure of an HNF basis; for a
    // general basis, reduce it first while tracking the transform.
    size_t n = basis.size();
    if (n == 0) return v == std::vector<Int>(v.size(), 0) ? std::optional<std::vector<Int>>({}) : std::nullopt;
    size_t cols = basis[0].size();
    // bring basis to HNF with row transform t: h = t * basis
    MatZ h = basis;
    MatZ t = matz_identity(static_cast<int>(n));
    size_t r = 0;
    for (size_t c = 0; c < cols && r < n; ++c) {
        for (size_t i = r + 1; i < n; ++i) {
            while (h[i][c] != 0) {
                if (h[r][c] == 0) {
                    std::swap(h[r], h[i]);
                    std::swap(t[r], t[i]);
                    continue;
                }
                Int q = floor_div(h[i][c], h[r][c]);
                for (size_t j = 0; j < cols; ++j) h[i][j] -= q * h[r][j];
                for (size_t j = 0; j < n; ++j) t[i][j] -= q * t[r][j];
                if (h[i][c] != 0) {
                    std::swap(h[r], h[i]);
                    std::swap(t[r], t[i]);
                }
            }
        }
        if (h[r][c] == 0) continue;
        if (h[r][c] < 0) {
            for (size_t j = 0; j < cols; ++j) h[r][j] = -h[r][j];
            for (size_t j = 0; j < n; ++j) t[r][j] = -t[r][j];
        }
        ++r;
    }
    // express v over the echelon rows
    std::vector<Int> w = v;
    std::vector<Int> coeff(r, 0);
    for (size_t i = 0; i < r; ++i) {
        size_t c = 0;
        while (c < cols && h[i][c] == 0) ++c;
        if (c == cols) break;
        Int q, rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), w[c].get_mpz_t(), h[i][c].get_mpz_t());
        if (rem != 0) return std::nullopt;
        coeff[i] = q;
        if (q != 0)
            for (size_t j = 0; j < cols; ++j) w[j] -= q * h[i][j];
    }
    for (size_t j = 0; j < cols; ++j)
        if (w[j] != 0) return std::nullopt;
    // pull back through the transform: v = coeff * h = coeff * t * basis
    std::vector<Int> x(n, 0);
    for (size_t i = 0; i < r; ++i)
        if (coeff[i] != 0)
            for (size_t j = 0; j < n; ++j) x[j] += coeff[i] * t[i][j];
    return x;
}

MatZ extend_unimodular_first_col(const std::vector<Int>& a) {
    int n = static_cast<int>(a.size());
    if (n == 1) {
        if (a[0] != 1 && a[0] != -1) throw InvalidParameters("vector not primitive");
        return {{a[0]}};
    }
    // Recursive construction: with g = gcd(a_1..a_{n-1}) and s*g + t*a_n = d,
    // a unimodular completion of (a_1..a_{n-1})/g feeds a 2x2 gcd block.
    Int g = 0;
    for (int i = 0; i + 1 < n; ++i) g = gcd(g, a[i]);
    if (g == 0) {
        // a = (0,...,0,a_n): a_n must be a unit
        if (a[n - 1] != 1 && a[n - 1] != -1) throw InvalidParameters("vector not primitive");
        MatZ u(n, std::vector<Int>(n, 0));
        u[n - 1][0] = a[n - 1];
        for (int i = 0; i + 1 < n; ++i) u[i][i + 1] = 1;
        return u;
    }
    std::vector<Int> head(n - 1);
    for (int i = 0; i + 1 < n; ++i) {
        mpz_divexact(head[i].get_mpz_t(), a[i].get_mpz_t(), g.get_mpz_t());
    }
    MatZ sub = extend_unimodular_first_col(head); // (n-1)x(n-1), first col = head
    Int d, s, t;
    mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), a[n - 1].get_mpz_t());
    if (d != 1 && d != -1) throw InvalidParameters("vector not primitive");
    if (d == -1) {
        s = -s;
        t = -t;
    }
    // columns: [a | completion]: first column (g*head, a_n); second gcd column
    // (-t*head, s); remaining columns lift sub's columns 2..n-1 with zero tail.
    MatZ u(n, std::vector<Int>(n, 0));
    for (int i = 0; i + 1 < n; ++i) {
        u[i][0] = a[i];
        u[i][1] = -t * head[i];
        for (int j = 1; j + 1 < n; ++j) u[i][j + 1] = sub[i][j];
    }
    u[n - 1][0] = a[n - 1];
    u[n - 1][1] = s;
    return u;
}

MatZ inverse_unimodular(const MatZ& u) {
    int n = static_cast<int>(u.size());
    MatQ a(n, VecQ(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = Rat(u[i][j]);
        a[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) throw InvalidParameters("matrix not invertible");
        std::swap(a[c], a[piv]);
        Rat p = a[c][c];
        for (int j = 0; j < 2 * n; ++j) a[c][j] /= p;
        for (int i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    MatZ inv(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat q = a[i][n + j];
            if (q.get_den() != 1) throw InvalidParameters("matrix not unimodular");
            inv[i][j] = q.get_num();
        }
    return inv;
}

std::optional<VecQ> solve_rational(MatQ a, VecQ b) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        std::swap(b[r], b[piv]);
        Rat p = a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] /= p;
        b[r] /= p;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    VecQ x(cols, Rat(0));
    for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return x;
}

MatQ matq_inverse(MatQ a) {
    size_t n = a.size();
    MatQ aug(n, VecQ(2 * n, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && aug[piv][c] == 0) ++piv;
        if (piv == n) throw DependentBasis("singular matrix");
        std::swap(aug[c], aug[piv]);
        Rat p = aug[c][c];
        for (size_t j = 0; j < 2 * n; ++j) aug[c][j] /= p;
        for (size_t i = 0; i < n; ++i) {
            if (i == c || aug[i][c] == 0) continue;
            Rat f = aug[i][c];
            for (size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[c][j];
        }
    }
    MatQ inv(n, VecQ(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

Projection project(const LatticeVector& x, const std::vector<LatticeVector>& S,
                   const GramMatrix& host) {
    size_t k = S.size();
    int n = host.rank();
    // normal equations: (B(s_i,s_j)) c = (B(s_i,x))
    MatQ a(k, VecQ(k));
    VecQ b(k);
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) a[i][j] = Rat(host.inner(S[i], S[j]));
        b[i] = Rat(host.inner(S[i], x));
    }
    // S must be linearly independent: its Gram must be nonsingular
    {
        MatZ gz(k, std::vector<Int>(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) gz[i][j] = host.inner(S[i], S[j]);
        if (det_bareiss(gz) == 0) throw DependentBasis("projection basis is dependent");
    }
    auto c = solve_rational(a, b);
    if (!c) throw DependentBasis("projection system inconsistent");
    Projection out;
    out.proj.assign(n, Rat(0));
    for (size_t i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) out.proj[j] += (*c)[i] * Rat(S[i][j]);
    out.perp.assign(n, Rat(0));
    for (int j = 0; j < n; ++j) out.perp[j] = Rat(x[j]) - out.proj[j];
    return out;
}

} // namespace latt
