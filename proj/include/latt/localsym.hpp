#ifndef LATT_LOCALSYM_HPP
#define LATT_LOCALSYM_HPP

#include <vector>

#include "latt/gram.hpp"

namespace latt {

// p^v * u with u a unit (numerator and denominator coprime to p).
// For p = infinity only the sign matters.
struct PadicUnit {
    bool infinite = false;
    Int p;
    long v = 0;
    Int unum = 1, uden = 1;
};

PadicUnit padic_decompose(const Rat& x, const Int& p);

// smallest positive quadratic nonresidue mod p (the canonical Delta_p)
Int delta_p(const Int& p);

// true iff the unit part of x is a square in Z_p^x (p odd)
bool unit_is_square(const PadicUnit& u);

// Hilbert symbol (a, b)_p, p prime or infinity (p = 0 encodes infinity).
int hilbert_symbol(const Rat& a, const Rat& b, const Int& p);
int hilbert_symbol_inf(const Rat& a, const Rat& b);

// Hasse symbol of a diagonal form: product over i < j of (a_i, a_j)_p.
int hasse_symbol(const std::vector<Rat>& diag, const Int& p);

struct JordanBlock {
    long scale;              // p-adic valuation of the block
    std::vector<Int> units;  // canonical unit classes, 1 or Delta_p
};

struct JordanSplitting {
    Int p;
    std::vector<JordanBlock> blocks;

    int rank() const;
    long det_valuation() const;
    // diagonal entries p^scale * unit, concatenated over blocks
    std::vector<Rat> diagonal() const;
};

// Jordan splitting at an odd prime via exact diagonalization over the
// localization Z_(p); scales strictly increasing.
JordanSplitting jordan_odd(const GramMatrix& g, const Int& p);

// Local representation criterion for a binary lattice against a quaternary
// lattice that is unimodular at the odd prime p: representation fails
// exactly when det(N) is the nonsquare unit class, d(Q_p ell) = -Delta_p and
// H_p(ell) = -1. Throws NotUnimodular when the precondition fails.
bool lemma_local(const GramMatrix& ell, const GramMatrix& N, const Int& p);

} // namespace latt

#endif
