#ifndef LATT_CONSTRUCT_HPP
#define LATT_CONSTRUCT_HPP

#include <string>

#include "latt/enumerate.hpp"
#include "latt/gram.hpp"
#include "latt/linalg.hpp"

namespace latt {

// A lattice given by basis vectors with rational coordinates in an ambient
// space carrying a diagonal inner product (orthonormal axes, optionally
// scaled). The derived Gram is integral by construction.
struct EmbeddedLattice {
    int ambient_dim;
    VecQ weights;              // diagonal of the ambient inner product
    MatQ basis;                // rows = basis vectors
    std::vector<std::vector<Int>> gram_rows;

    Rat ambient_inner(const VecQ& a, const VecQ& b) const;
    GramMatrix gram() const { return GramMatrix(gram_rows); }
};

EmbeddedLattice root_lattice(char kind, int n); // kind in {'A','D','E'}

struct GlueVector {
    VecQ coords; // in the component's ambient coordinates
    Rat norm;
};

// Canonical dual-coset representative [[i]] of a root lattice.
GlueVector glue_vector(char kind, int n, int i);

// Parsed glue-notation expression: components plus one glue token each.
struct GlueSpec {
    struct Component {
        bool scalar;
        char kind; // root components only
        int n;     // root rank
        Int a;     // scalar norm
    };
    struct Token {
        bool fraction;
        int index; // root glue index
        Int d;     // scalar token 1/d
    };
    std::vector<Component> components;
    std::vector<Token> tokens;

    std::string render() const;
};

GlueSpec parse_glue(const std::string& text);

// Order of the glue generator in the dual quotient of the orthogonal sum;
// the index of the plain orthogonal sum inside the glued lattice.
Int glue_order(const GlueSpec& spec);

EmbeddedLattice build_glue(const GlueSpec& spec);

// Normal form of an index-p sublattice of I_n:
//   Z(e_2 + u_2 e_1) + ... + Z(e_n + u_n e_1) + Z(p e_1).
// Accepts any 0 <= u_i < p; the canonical enumeration uses
// 0 <= u_2 <= ... <= u_n <= p/2.
GramMatrix index_p_sublattice(int n, const Int& p, const std::vector<Int>& u);

// All isometry classes of index-p sublattices of I_n, deduplicated.
std::vector<GramMatrix> enumerate_index_p_sublattices(int n, const Int& p,
                                                      const EnumBudget& budget = {});

// I_{a,b}(p) = Z(e_1 + a e_3) + Z(e_2 + b e_3) + Z(p e_3), 0 <= a <= b <= p/2
GramMatrix ternary_Iabp(const Int& a, const Int& b, const Int& p);

// The index-k sublattice A_{n,k} of I_n spanned by the A_{n-1} chain and
// -(e_{n-k+1} + ... + e_n); rank n, determinant k^2.
EmbeddedLattice Ank(int n, int k);

GramMatrix named_lattice(const std::string& name);
std::vector<std::string> named_lattice_catalog();

} // namespace latt

#endif
