#include "latt/enumerate.hpp"

#include <algorithm>

#include "latt/errors.hpp"

namespace latt {

namespace {

bool lex_less(const LatticeVector& a, const LatticeVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool first_nonzero_positive(const LatticeVector& v) {
    for (const auto& x : v) {
        if (x > 0) return true;
        if (x < 0) return false;
    }
    return false; // zero vector
}

struct Enumerator {
    const RationalCholesky& chol;
    const Rat& bound;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    int n;
    std::vector<Int> x;
    std::vector<Rat> tail_norm; // tail_norm[i] = sum_{k>i} h_k (x_k + u_k)^2
    std::vector<std::pair<LatticeVector, Rat>> out;

    Enumerator(const RationalCholesky& ch, const Rat& b, std::uint64_t bud)
        : chol(ch), bound(b), budget(bud), n(ch.rank()), x(ch.rank(), 0),
          tail_norm(ch.rank() + 1, Rat(0)) {}

    void tick() {
        if (++nodes > budget) throw BudgetExceeded(nodes);
    }

    // Depth-first over coordinates from last to first, candidate ranges
    // ascending; completeness follows from the exact interval test at each
    // level.
    void descend(int i) {
        Rat u(0);
        for (int j = i + 1; j < n; ++j)
            if (x[j] != 0) u += chol.c[i][j] * Rat(x[j]);
        const Rat budget_here = bound - tail_norm[i + 1];
        auto level_ok = [&](const Int& z) {
            tick();
            Rat d = Rat(z) + u;
            return chol.h[i] * d * d <= budget_here;
        };
        Int m0 = rat_round(-u);
        if (!level_ok(m0)) return;
        Int lo = m0, hi = m0;
        while (level_ok(lo - 1)) --lo;
        while (level_ok(hi + 1)) ++hi;
        for (Int z = lo; z <= hi; ++z) {
            x[i] = z;
            Rat d = Rat(z) + u;
            tail_norm[i] = tail_norm[i + 1] + chol.h[i] * d * d;
            if (i == 0) {
                if (first_nonzero_positive(x)) out.emplace_back(x, tail_norm[0]);
            } else {
                descend(i - 1);
            }
        }
        x[i] = 0;
    }
};

} // namespace

std::vector<std::pair<LatticeVector, Rat>>
enumerate_rational(const RationalCholesky& chol, const Rat& bound, const EnumBudget& budget,
                   EnumStats* stats) {
    Enumerator e(chol, bound, budget.nodes);
    if (sgn(bound) >= 0 && chol.rank() > 0) e.descend(chol.rank() - 1);
    if (stats) stats->nodes = e.nodes;
    auto& out = e.out;
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return lex_less(a.first, b.first);
    });
    return out;
}

std::vector<std::pair<LatticeVector, Int>>
enumerate_vectors(const GramMatrix& g, const Int& bound, const EnumBudget& budget,
                  EnumStats* stats) {
    auto raw = enumerate_rational(cholesky(g), Rat(bound), budget, stats);
    std::vector<std::pair<LatticeVector, Int>> out;
    out.reserve(raw.size());
    for (auto& [v, q] : raw) out.emplace_back(std::move(v), Int(q.get_num()));
    return out;
}

Int min_norm(const GramMatrix& g, const EnumBudget& budget) {
    Int bound = g.at(0, 0);
    for (int i = 1; i < g.rank(); ++i) bound = std::min(bound, g.at(i, i));
    auto vecs = enumerate_vectors(g, bound, budget);
    Int best = bound; // e_i with the minimal diagonal realizes it
    for (const auto& [v, q] : vecs) best = std::min(best, q);
    return best;
}

std::vector<Int> successive_minima(const GramMatrix& g, int k, const EnumBudget& budget) {
    int n = g.rank();
    if (k < 1 || k > n) throw InvalidParameters("successive_minima: k out of range");
    std::vector<Int> diag;
    for (int i = 0; i < n; ++i) diag.push_back(g.at(i, i));
    std::sort(diag.begin(), diag.end());
    // k basis vectors with the smallest diagonals are independent, so the
    // k-th minimum is at most diag[k-1].
    auto vecs = enumerate_vectors(g, diag[k - 1], budget);
    std::vector<Int> minima;
    std::vector<int> pivots;
    MatQ echelon; // echelon[i] has leading nonzero at pivots[i], pairwise distinct
    auto leading = [n](const VecQ& r) {
        int p = 0;
        while (p < n && r[p] == 0) ++p;
        return p;
    };
    for (const auto& [v, q] : vecs) {
        VecQ row(n);
        for (int i = 0; i < n; ++i) row[i] = Rat(v[i]);
        int p = leading(row);
        while (p < n) {
            auto it = std::find(pivots.begin(), pivots.end(), p);
            if (it == pivots.end()) break;
            const VecQ& e = echelon[static_cast<size_t>(it - pivots.begin())];
            Rat f = row[p] / e[p];
            for (int i = p; i < n; ++i) row[i] -= f * e[i];
            p = leading(row);
        }
        if (p == n) continue; // dependent on chosen vectors
        pivots.push_back(p);
        echelon.push_back(row);
        minima.push_back(q);
        if (static_cast<int>(minima.size()) == k) break;
    }
    return minima;
}

std::map<Int, std::uint64_t> theta_coefficients(const GramMatrix& g, const Int& bound,
                                                const EnumBudget& budget) {
    std::map<Int, std::uint64_t> counts;
    for (const auto& [v, q] : enumerate_vectors(g, bound, budget)) counts[q] += 2;
    return counts;
}

} // namespace latt
