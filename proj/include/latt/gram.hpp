#ifndef LATT_GRAM_HPP
#define LATT_GRAM_HPP

#include <initializer_list>
#include <vector>

#include "latt/numeric.hpp"

namespace latt {

// Coordinates of a lattice vector in the basis of its lattice.
using LatticeVector = std::vector<Int>;

// Symmetric positive definite integer matrix; the universal lattice handle.
// Validated on construction: symmetry, positive definiteness (all rational
// Cholesky pivots > 0), diagonal >= 1. Immutable afterwards.
class GramMatrix {
public:
    explicit GramMatrix(std::vector<std::vector<Int>> rows);

    static GramMatrix diagonal(const std::vector<Int>& d);
    static GramMatrix identity(int n);

    int rank() const { return rank_; }
    const Int& at(int i, int j) const { return entries_[static_cast<size_t>(i) * rank_ + j]; }

    // x^t G y
    Int inner(const LatticeVector& x, const LatticeVector& y) const;
    Int norm(const LatticeVector& x) const { return inner(x, x); }

    const std::vector<Int>& raw() const { return entries_; }
    std::vector<std::vector<Int>> rows() const;

    bool operator==(const GramMatrix& o) const {
        return rank_ == o.rank_ && entries_ == o.entries_;
    }

private:
    int rank_;
    std::vector<Int> entries_; // row-major
};

Int determinant(const GramMatrix& g);

// Block-diagonal Gram of an orthogonal sum; determinants multiply.
GramMatrix orthogonal_sum(const std::vector<GramMatrix>& parts);

// Index of a full-rank sublattice from the determinant ratio,
// sqrt(det(sub)/det(sup)). Throws NotASquareRatio when the ratio is not a
// perfect square (the pair cannot be in a full-rank sublattice relation).
Int index_in(const GramMatrix& sub, const GramMatrix& sup);

} // namespace latt

#endif
