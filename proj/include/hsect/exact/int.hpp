#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hsect {

// Arbitrary-precision integers and rationals throughout the core; the
// determinants and Cholesky data of rank-20 Gram matrices overflow any
// fixed-width type.
using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// g = a*x + b*y
inline Int gcdext(const Int& a, const Int& b, Int& x, Int& y) {
    Int g;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// floor(sqrt(n)), n >= 0
inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int mod_floor(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int pow_int(const Int& a, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

inline long to_long(const Int& a) {
    if (!a.fits_slong_p()) throw std::overflow_error("Int does not fit in long: " + a.get_str());
    return a.get_si();
}

inline Rat rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// x mod m normalized to [0, m) for rationals, m > 0 integer or rational
inline Rat mod_rat(const Rat& x, const Rat& m) {
    Rat q = x / m;
    Int fl = floor_div(q.get_num(), q.get_den());
    return x - Rat(fl) * m;
}

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

}  // namespace hsect
