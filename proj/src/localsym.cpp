#include "latt/localsym.hpp"

#include <algorithm>
#include <limits>

#include "latt/errors.hpp"
#include "latt/linalg.hpp"

namespace latt {

PadicUnit padic_decompose(const Rat& x, const Int& p) {
    if (x == 0) throw InvalidParameters("p-adic decomposition of zero");
    PadicUnit out;
    out.p = p;
    out.unum = x.get_num();
    out.uden = x.get_den();
    while (out.unum % p == 0) {
        out.unum /= p;
        ++out.v;
    }
    while (out.uden % p == 0) {
        out.uden /= p;
        --out.v;
    }
    return out;
}

Int delta_p(const Int& p) {
    if (p == 2) throw InvalidParameters("delta_p is defined for odd primes");
    for (Int d = 2; d < p; ++d)
        if (legendre(d, p) == -1) return d;
    throw InvalidParameters("no nonresidue found; p not an odd prime?");
}

bool unit_is_square(const PadicUnit& u) {
    return legendre(u.unum * u.uden % u.p, u.p) == 1;
}

namespace {

// (u-1)/2 mod 2 and (u^2-1)/8 mod 2 for a 2-adic unit given as num/den
int eps2(const Int& num, const Int& den) {
    Int m = num * den % 4; // den odd: den^{-1} = den (mod 4 up to squares of odd... use num*den)
    if (m < 0) m += 4;
    return m == 1 ? 0 : 1;
}

int omega2(const Int& num, const Int& den) {
    Int m = num * den % 8;
    if (m < 0) m += 8;
    return (m == 1 || m == 7) ? 0 : 1;
}

} // namespace

int hilbert_symbol_inf(const Rat& a, const Rat& b) {
    if (a == 0 || b == 0) throw InvalidParameters("Hilbert symbol of zero");
    return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
}

int hilbert_symbol(const Rat& a, const Rat& b, const Int& p) {
    if (a == 0 || b == 0) throw InvalidParameters("Hilbert symbol of zero");
    if (p == 0) return hilbert_symbol_inf(a, b);
    PadicUnit pa = padic_decompose(a, p);
    PadicUnit pb = padic_decompose(b, p);
    long alpha = pa.v, beta = pb.v;
    if (p == 2) {
        // (a,b)_2 = (-1)^{eps(u)eps(w) + alpha*omega(w) + beta*omega(u)}
        int expo = eps2(pa.unum, pa.uden) * eps2(pb.unum, pb.uden) +
                   static_cast<int>(alpha % 2) * omega2(pb.unum, pb.uden) +
                   static_cast<int>(beta % 2) * omega2(pa.unum, pa.uden);
        return expo % 2 == 0 ? 1 : -1;
    }
    // odd p: (-1)^{alpha*beta*(p-1)/2} (u/p)^beta (w/p)^alpha
    int sign = 1;
    Int e = (p - 1) / 2;
    if ((alpha % 2) && (beta % 2) && e % 2 == 1) sign = -sign;
    if (beta % 2) sign *= legendre(pa.unum * pa.uden % p, p);
    if (alpha % 2) sign *= legendre(pb.unum * pb.uden % p, p);
    return sign;
}

int hasse_symbol(const std::vector<Rat>& diag, const Int& p) {
    int s = 1;
    for (size_t i = 0; i < diag.size(); ++i)
        for (size_t j = i + 1; j < diag.size(); ++j) s *= hilbert_symbol(diag[i], diag[j], p);
    return s;
}

int JordanSplitting::rank() const {
    int r = 0;
    for (const auto& b : blocks) r += static_cast<int>(b.units.size());
    return r;
}

long JordanSplitting::det_valuation() const {
    long v = 0;
    for (const auto& b : blocks) v += b.scale * static_cast<long>(b.units.size());
    return v;
}

std::vector<Rat> JordanSplitting::diagonal() const {
    std::vector<Rat> d;
    for (const auto& b : blocks) {
        Rat scale(1);
        for (long s = 0; s < b.scale; ++s) scale *= p;
        for (const auto& u : b.units) d.push_back(scale * Rat(u));
    }
    return d;
}

JordanSplitting jordan_odd(const GramMatrix& g, const Int& p) {
    if (p == 2 || !is_prime(p)) throw InvalidParameters("jordan_odd needs an odd prime");
    int n = g.rank();
    MatQ m(n, VecQ(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = Rat(g.at(i, j));

    auto valuation = [&](const Rat& x) -> long {
        return x == 0 ? std::numeric_limits<long>::max() : padic_decompose(x, p).v;
    };

    std::vector<Rat> diag;
    for (int step = 0; step < n; ++step) {
        // locate an entry of minimal valuation in the remaining block,
        // preferring the diagonal on ties
        long best = std::numeric_limits<long>::max();
        int bi = -1, bj = -1;
        for (int i = step; i < n; ++i)
            for (int j = i; j < n; ++j) {
                long v = valuation(m[i][j]);
                if (v < best || (v == best && bi != bj && i == j)) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (bi != bj) {
            // x_bi <- x_bi +- x_bj moves the minimum onto the diagonal; at
            // odd p one of the signs keeps the minimal valuation because the
            // two candidates differ by 4*m[bi][bj]
            auto apply = [&](int sign) {
                for (int j = 0; j < n; ++j) m[bi][j] += Rat(sign) * m[bj][j];
                for (int i = 0; i < n; ++i) m[i][bi] += Rat(sign) * m[i][bj];
            };
            apply(1);
            if (valuation(m[bi][bi]) != best) {
                apply(-1); // undo
                apply(-1); // use the difference instead
                if (valuation(m[bi][bi]) != best)
                    throw Error("jordan_odd: failed to expose minimal valuation");
            }
        }
        if (bi != step) {
            std::swap(m[bi], m[step]);
            for (int i = 0; i < n; ++i) std::swap(m[i][bi], m[i][step]);
        }
        // eliminate row/column below the pivot
        for (int i = step + 1; i < n; ++i) {
            if (m[step][i] == 0) continue;
            Rat f = m[step][i] / m[step][step];
            for (int j = 0; j < n; ++j) m[i][j] -= f * m[step][j];
            for (int j = 0; j < n; ++j) m[j][i] -= f * m[j][step];
        }
        diag.push_back(m[step][step]);
    }

    JordanSplitting out;
    out.p = p;
    Int dp = delta_p(p);
    std::vector<std::pair<long, Int>> parts;
    for (const auto& d : diag) {
        PadicUnit u = padic_decompose(d, p);
        parts.emplace_back(u.v, unit_is_square(u) ? Int(1) : dp);
    }
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [v, unit] : parts) {
        if (out.blocks.empty() || out.blocks.back().scale != v)
            out.blocks.push_back({v, {}});
        out.blocks.back().units.push_back(unit);
    }
    return out;
}

bool lemma_local(const GramMatrix& ell, const GramMatrix& N, const Int& p) {
    if (ell.rank() != 2) throw InvalidParameters("lemma_local: ell must be binary");
    if (N.rank() != 4) throw InvalidParameters("lemma_local: N must be quaternary");
    if (p == 2 || !is_prime(p)) throw InvalidParameters("lemma_local: p must be an odd prime");
    JordanSplitting jn = jordan_odd(N, p);
    if (jn.blocks.size() != 1 || jn.blocks[0].scale != 0)
        throw NotUnimodular("lemma_local: N is not unimodular at p");

    JordanSplitting je = jordan_odd(ell, p);
    if (je.blocks[0].scale == 0) return true; // ell represents a unit at p

    PadicUnit dn = padic_decompose(Rat(determinant(N)), p);
    if (dn.v % 2 == 0 && unit_is_square(dn)) return true; // dN_p = 1

    // dN_p = Delta_p: failure iff d(Q_p ell) = -Delta_p and H_p(ell) = -1
    PadicUnit de = padic_decompose(Rat(determinant(ell)), p);
    bool d_matches = de.v % 2 == 0 &&
                     legendre(de.unum * de.uden % p, p) == legendre(-delta_p(p) % p + p, p);
    bool hasse_minus = hasse_symbol(je.diagonal(), p) == -1;
    return !(d_matches && hasse_minus);
}

} // namespace latt
