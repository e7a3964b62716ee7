#include "latt/gram.hpp"

#include "latt/errors.hpp"
#include "latt/linalg.hpp"

namespace latt {

namespace {

// Positive definiteness via exact rational pivots (leading principal minors
// all positive iff every pivot stays positive).
void check_positive_definite(const std::vector<Int>& e, int n) {
    MatQ m(n, VecQ(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = Rat(e[static_cast<size_t>(i) * n + j]);
    for (int i = 0; i < n; ++i) {
        if (sgn(m[i][i]) <= 0) throw NotPositiveDefinite("pivot <= 0 at index " + std::to_string(i));
        for (int k = i + 1; k < n; ++k) {
            Rat f = m[i][k] / m[i][i];
            for (int l = i + 1; l < n; ++l) m[k][l] -= f * m[i][l];
        }
    }
}

} // namespace

GramMatrix::GramMatrix(std::vector<std::vector<Int>> rows) {
    rank_ = static_cast<int>(rows.size());
    if (rank_ == 0) throw InvalidParameters("empty Gram matrix");
    entries_.reserve(static_cast<size_t>(rank_) * rank_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != rank_) throw InvalidParameters("Gram matrix not square");
        for (const auto& x : r) entries_.push_back(x);
    }
    for (int i = 0; i < rank_; ++i)
        for (int j = i + 1; j < rank_; ++j)
            if (at(i, j) != at(j, i)) throw InvalidParameters("Gram matrix not symmetric");
    for (int i = 0; i < rank_; ++i)
        if (at(i, i) < 1) throw NotPositiveDefinite("diagonal entry < 1");
    check_positive_definite(entries_, rank_);
}

GramMatrix GramMatrix::diagonal(const std::vector<Int>& d) {
    std::vector<std::vector<Int>> rows(d.size(), std::vector<Int>(d.size(), 0));
    for (size_t i = 0; i < d.size(); ++i) rows[i][i] = d[i];
    return GramMatrix(std::move(rows));
}

GramMatrix GramMatrix::identity(int n) {
    return diagonal(std::vector<Int>(static_cast<size_t>(n), 1));
}

Int GramMatrix::inner(const LatticeVector& x, const LatticeVector& y) const {
    Int acc = 0;
    for (int i = 0; i < rank_; ++i) {
        if (x[i] == 0) continue;
        Int row = 0;
        for (int j = 0; j < rank_; ++j)
            if (y[j] != 0) row += at(i, j) * y[j];
        acc += x[i] * row;
    }
    return acc;
}

std::vector<std::vector<Int>> GramMatrix::rows() const {
    std::vector<std::vector<Int>> out(rank_, std::vector<Int>(rank_));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) out[i][j] = at(i, j);
    return out;
}

Int determinant(const GramMatrix& g) {
    return det_bareiss(g.rows());
}

GramMatrix orthogonal_sum(const std::vector<GramMatrix>& parts) {
    int n = 0;
    for (const auto& p : parts) n += p.rank();
    std::vector<std::vector<Int>> rows(n, std::vector<Int>(n, 0));
    int off = 0;
    for (const auto& p : parts) {
        for (int i = 0; i < p.rank(); ++i)
            for (int j = 0; j < p.rank(); ++j) rows[off + i][off + j] = p.at(i, j);
        off += p.rank();
    }
    return GramMatrix(std::move(rows));
}

Int index_in(const GramMatrix& sub, const GramMatrix& sup) {
    if (sub.rank() != sup.rank())
        throw NotASquareRatio("rank mismatch between sublattice and superlattice");
    Int ds = determinant(sub), dS = determinant(sup);
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), ds.get_mpz_t(), dS.get_mpz_t());
    if (r != 0 || !is_square(q))
        throw NotASquareRatio("determinant ratio is not the square of an integer");
    return isqrt(q);
}

} // namespace latt
