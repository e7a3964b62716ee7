#ifndef LATT_LINALG_HPP
#define LATT_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "latt/gram.hpp"
#include "latt/numeric.hpp"

namespace latt {

using MatZ = std::vector<std::vector<Int>>;
using MatQ = std::vector<std::vector<Rat>>;
using VecQ = std::vector<Rat>;

MatZ matz_identity(int n);
MatZ matz_mul(const MatZ& a, const MatZ& b);
MatZ matz_transpose(const MatZ& a);
// a^t * g * a for a square or rectangular transform a (columns = images)
MatZ matz_congruence(const MatZ& g, const MatZ& a);

Int det_bareiss(MatZ m); // fraction-free exact determinant

// Row-style Hermite normal form of the lattice spanned by the rows of m.
// Returns the full-rank basis rows (rank many), echelon with positive pivots
// and reduced entries above each pivot. Deterministic.
MatZ hnf_rows(const MatZ& m);

// Solve x * basis = v over the integers, where `basis` has full row rank.
// Returns nullopt when v is not in the row span (over Z).
std::optional<std::vector<Int>> solve_left_int(const MatZ& basis, const std::vector<Int>& v);

// Extend a primitive integer vector to a unimodular matrix having it as the
// first column.
MatZ extend_unimodular_first_col(const std::vector<Int>& a);

// Exact inverse of a unimodular integer matrix.
MatZ inverse_unimodular(const MatZ& u);

// Gaussian elimination over Q: solve A x = b; nullopt when inconsistent
// or A singular in the needed directions.
std::optional<VecQ> solve_rational(MatQ a, VecQ b);

MatQ matq_inverse(MatQ a); // throws DependentBasis when singular

// Orthogonal decomposition of x against the sublattice spanned by S
// (columns of host coordinates): x = proj + perp with proj in Q*S and
// perp orthogonal to every vector of S, exactly.
struct Projection {
    VecQ proj;
    VecQ perp;
};
Projection project(const LatticeVector& x, const std::vector<LatticeVector>& S,
                   const GramMatrix& host);

} // namespace latt

#endif
