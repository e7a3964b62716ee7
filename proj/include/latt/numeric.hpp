#ifndef LATT_NUMERIC_HPP
#define LATT_NUMERIC_HPP

#include <gmpxx.h>
#include <cstdint>
#include <vector>

namespace latt {

// All arithmetic in decision paths is exact: arbitrary-precision integers
// and rationals. No floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// floor of a rational
inline Int rat_floor(const Rat& q) {
    return floor_div(q.get_num(), q.get_den());
}

inline Int rat_ceil(const Rat& q) {
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return c;
}

// nearest integer, ties toward +inf (any tie rule works where this is used)
inline Int rat_round(const Rat& q) {
    return rat_floor(q + Rat(1, 2));
}

// nearest integer with ties rounded toward zero: round_htz(3/2) = 1
inline Int rat_round_half_to_zero(const Rat& q) {
    if (sgn(q) >= 0) return rat_ceil(q - Rat(1, 2));
    return -rat_ceil(-q - Rat(1, 2));
}

inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// floor(sqrt(q)) for q >= 0; equals isqrt(floor(q)) exactly.
inline Int rat_floor_sqrt(const Rat& q) {
    return isqrt(rat_floor(q));
}

inline bool is_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// Legendre symbol (a/p) for odd prime p
inline int legendre(const Int& a, const Int& p) {
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

inline std::vector<Int> primes_upto(const Int& bound) {
    std::vector<Int> out;
    for (Int p = 2; p <= bound; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t()))
        out.push_back(p);
    return out;
}

} // namespace latt

#endif
