#ifndef LATT_CHOLESKY_HPP
#define LATT_CHOLESKY_HPP

#include "latt/gram.hpp"
#include "latt/linalg.hpp"

namespace latt {

// Exact rational Gram-Schmidt data of a positive definite form:
//   f(x) = sum_i h_i (x_i + sum_{j>i} c_ij x_j)^2
// with all h_i > 0. Reconstruction is exact.
struct RationalCholesky {
    std::vector<Rat> h;
    MatQ c; // strictly upper triangular, c[i][j] defined for j > i

    int rank() const { return static_cast<int>(h.size()); }
};

RationalCholesky cholesky(const GramMatrix& g);

// Core on a rational symmetric matrix (used for trailing quotient forms).
RationalCholesky cholesky_rational(const MatQ& g);

} // namespace latt

#endif
