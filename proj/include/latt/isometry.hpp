#ifndef LATT_ISOMETRY_HPP
#define LATT_ISOMETRY_HPP

#include "latt/enumerate.hpp"
#include "latt/gram.hpp"
#include "latt/linalg.hpp"

namespace latt {

// Integer certificate of a representation: columns of T are the images of
// the target basis vectors in host coordinates, and T^t G_host T = G_target
// holds exactly. Verified on construction.
struct Representation {
    MatZ T; // host_rank x target_rank
};

Representation make_representation(MatZ t, const GramMatrix& host, const GramMatrix& target);

// Complete isometry decision: equal rank, equal determinant, theta prefilter
// up to max diagonal, then exhaustive embedding search. A full-rank
// representation with equal determinants is automatically unimodular, which
// certifies the reverse direction as well. Throws BudgetExceeded when the
// search cannot finish within the budget (distinct from false).
bool isometry_test(const GramMatrix& a, const GramMatrix& b, const EnumBudget& budget = {});

} // namespace latt

#endif
