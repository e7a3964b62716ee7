#ifndef LATT_REDUCE_HPP
#define LATT_REDUCE_HPP

#include <optional>

#include "latt/cholesky.hpp"
#include "latt/enumerate.hpp"
#include "latt/gram.hpp"
#include "latt/linalg.hpp"

namespace latt {

// Hermite reduced basis data: each trailing form achieves its minimum h_i at
// the unit vector, |c_ij| <= 1/2, and consequently h_i/h_{i+1} <= 4/3.
struct HermiteReducedForm {
    std::vector<Rat> h; // Hermite minima
    MatQ c;             // strictly upper triangular coefficients
    MatZ U;             // unimodular transform, U^t G U = reduced Gram
    GramMatrix gram;    // the reduced Gram itself
};

HermiteReducedForm hermite_reduce(const GramMatrix& g, const EnumBudget& budget = {});

// Result of repeatedly splitting off 2*(linear form)^2 layers from the last
// basis vector while the trailing Hermite minimum stays >= 4:
//   G = 2 * sum_k forms_k^t forms_k + W^t residual W   (exactly)
// with min(residual) >= 2 and trailing Hermite minimum of residual < 4.
struct PeelDecomposition {
    int count = 0;
    MatZ forms;        // each row is a linear form in the original coordinates
    GramMatrix residual;
    MatZ residual_transform; // W above (unimodular)
};

PeelDecomposition peel_off(const GramMatrix& g, const EnumBudget& budget = {});

// number of primes p with 2 p^2 < n
Int prime_count_t(int n);

// 2n - 1 + (n - 1)(t - 1)
Int lower_bound_iso(int n);

Int g_table(int n); // known minimal I_N recipients for rank n <= 6

// g(n) + (4/3)^n (3n^3 - 12n^2 + 48n) + n^3/2 - 3n^2/2 - 47n - 1, exact
Rat upper_bound_iso(int n, std::optional<Int> g_value = std::nullopt);

// (4/3)^n (3n^2 - 12n + 48) + n^2/2 - 3n/2 - 48, exact
Rat sfrak_bound(int n);

} // namespace latt

#endif
