#include "latt/reduce.hpp"

#include <algorithm>

#include "latt/errors.hpp"

namespace latt {

namespace {

// Minimum of the trailing form f^i (variables x_i..x_n) of the Cholesky
// data, realized by the canonically least vector.
std::vector<Int> trailing_minimizer(const RationalCholesky& chol, int from,
                                    const EnumBudget& budget) {
    int k = chol.rank() - from;
    RationalCholesky tail;
    tail.h.assign(chol.h.begin() + from, chol.h.end());
    tail.c.assign(k, VecQ(k, Rat(0)));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) tail.c[i][j] = chol.c[from + i][from + j];
    // the trailing unit vector scores h_from, so the minimum is <= h_from
    auto vecs = enumerate_rational(tail, chol.h[from], budget);
    // canonical: least norm, then lexicographically least coordinates
    return vecs.front().first;
}

MatZ embed_tail_transform(int n, int from, const MatZ& w) {
    MatZ u = matz_identity(n);
    int k = n - from;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) u[from + i][from + j] = w[i][j];
    return u;
}

} // namespace

HermiteReducedForm hermite_reduce(const GramMatrix& g, const EnumBudget& budget) {
    int n = g.rank();
    MatZ u = matz_identity(n);
    MatZ current = g.rows();
    for (int i = 0; i < n; ++i) {
        MatQ cq(n, VecQ(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) cq[a][b] = Rat(current[a][b]);
        RationalCholesky chol = cholesky_rational(cq);
        std::vector<Int> a = trailing_minimizer(chol, i, budget);
        bool is_unit = a[0] == 1;
        for (size_t t = 1; t < a.size(); ++t)
            if (a[t] != 0) is_unit = false;
        if (!is_unit) {
            MatZ w = extend_unimodular_first_col(a);
            MatZ step = embed_tail_transform(n, i, w);
            u = matz_mul(u, step);
            current = matz_congruence(g.rows(), u);
        }
    }
    // size reduction: land every c_ij in [-1/2, 1/2] without touching the
    // flag of leading spans (so the Hermite minima stay realized)
    for (int j = 1; j < n; ++j) {
        for (int i = j - 1; i >= 0; --i) {
            MatQ cq(n, VecQ(n));
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) cq[a][b] = Rat(current[a][b]);
            RationalCholesky chol = cholesky_rational(cq);
            Int shift = -rat_round_half_to_zero(chol.c[i][j]);
            if (shift == 0) continue;
            for (int r = 0; r < n; ++r) u[r][j] += shift * u[r][i];
            current = matz_congruence(g.rows(), u);
        }
    }
    MatQ cq(n, VecQ(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) cq[a][b] = Rat(current[a][b]);
    RationalCholesky chol = cholesky_rational(cq);
    HermiteReducedForm out{chol.h, chol.c, std::move(u), GramMatrix(current)};
    return out;
}

PeelDecomposition peel_off(const GramMatrix& g, const EnumBudget& budget) {
    if (min_norm(g, budget) < 2) throw MinTooSmall("peel_off needs min(G) >= 2");
    int n = g.rank();
    PeelDecomposition out{0, {}, g, matz_identity(n)};
    MatZ acc = matz_identity(n); // product of the per-round reduction transforms
    GramMatrix current = g;
    while (true) {
        HermiteReducedForm red = hermite_reduce(current, budget);
        acc = matz_mul(acc, red.U);
        MatZ acc_inv = inverse_unimodular(acc);
        if (red.h[n - 1] < 4) {
            out.residual = red.gram;
            out.residual_transform = std::move(acc_inv);
            return out;
        }
        out.forms.push_back(acc_inv[n - 1]); // last-coordinate functional
        ++out.count;
        MatZ peeled = red.gram.rows();
        peeled[n - 1][n - 1] -= 2;
        current = GramMatrix(std::move(peeled));
    }
}

Int prime_count_t(int n) {
    Int t = 0;
    for (Int p = 2; 2 * p * p < n; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) ++t;
    return t;
}

Int lower_bound_iso(int n) {
    if (n < 1) throw InvalidParameters("lower_bound_iso: need n >= 1");
    Int t = prime_count_t(n);
    return 2 * Int(n) - 1 + Int(n - 1) * (t - 1);
}

Int g_table(int n) {
    switch (n) {
        case 1: return 4;
        case 2: return 5;
        case 3: return 6;
        case 4: return 7;
        case 5: return 8;
        case 6: return 10;
        default: throw UnknownG("g(n) is only known for n <= 6");
    }
}

namespace {

Rat four_thirds_pow(int n) {
    Rat r(1);
    for (int i = 0; i < n; ++i) r *= Rat(4, 3);
    return r;
}

} // namespace

Rat upper_bound_iso(int n, std::optional<Int> g_value) {
    if (n < 1) throw InvalidParameters("upper_bound_iso: need n >= 1");
    Int g = 0;
    if (g_value)
        g = *g_value;
    else if (n <= 6)
        g = g_table(n);
    else
        throw UnknownG("upper_bound_iso: supply g(n) for n >= 7");
    Int nn(n);
    Rat poly = Rat(nn * nn * nn, 2) - Rat(3 * nn * nn, 2) - 47 * nn - 1;
    return Rat(g) + four_thirds_pow(n) * Rat(3 * nn * nn * nn - 12 * nn * nn + 48 * nn) + poly;
}

Rat sfrak_bound(int n) {
    if (n < 1) throw InvalidParameters("sfrak_bound: need n >= 1");
    Int nn(n);
    return four_thirds_pow(n) * Rat(3 * nn * nn - 12 * nn + 48) + Rat(nn * nn, 2) -
           Rat(3 * nn, 2) - 48;
}

} // namespace latt
