#ifndef LATT_ENUMERATE_HPP
#define LATT_ENUMERATE_HPP

#include <cstdint>
#include <map>
#include <utility>

#include "latt/cholesky.hpp"
#include "latt/gram.hpp"

namespace latt {

struct EnumBudget {
    std::uint64_t nodes = 100'000'000; // default tree-node budget
};

struct EnumStats {
    std::uint64_t nodes = 0;
};

// Complete short-vector enumeration: all nonzero v with Q(v) <= bound, one
// of each +-v pair (the representative whose first nonzero coordinate is
// positive), sorted by (norm, lexicographic coords). Completeness is
// contractual. Throws BudgetExceeded when the node budget runs out; no
// partial result is returned.
std::vector<std::pair<LatticeVector, Int>>
enumerate_vectors(const GramMatrix& g, const Int& bound, const EnumBudget& budget = {},
                  EnumStats* stats = nullptr);

// Same, driven by precomputed rational Cholesky data and a rational bound
// (used on trailing quotient forms during reduction).
std::vector<std::pair<LatticeVector, Rat>>
enumerate_rational(const RationalCholesky& chol, const Rat& bound,
                   const EnumBudget& budget = {}, EnumStats* stats = nullptr);

Int min_norm(const GramMatrix& g, const EnumBudget& budget = {});

// First k successive minima, greedy over enumerated vectors by rising norm.
std::vector<Int> successive_minima(const GramMatrix& g, int k, const EnumBudget& budget = {});

// Counts of all nonzero vectors (both signs) per norm <= bound.
std::map<Int, std::uint64_t> theta_coefficients(const GramMatrix& g, const Int& bound,
                                                const EnumBudget& budget = {});

} // namespace latt

#endif
