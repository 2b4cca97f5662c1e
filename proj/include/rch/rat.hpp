#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rch {

// Exact rational scalar. GMP keeps the canonical form (gcd 1, positive
// denominator); every constructor below goes through canonicalize().
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::runtime_error("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Int& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer too large for long");
    return z.get_si();
}

inline long to_long(const Rat& r) {
    if (!is_integer(r)) throw std::domain_error("rational is not an integer");
    return to_long(Int(r.get_num()));
}

// n^k for integer k >= 0.
inline Int ipow(long base, int exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 0, 0);
    mpz_set_si(r.get_mpz_t(), base);
    mpz_pow_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

// Rational power with possibly negative exponent.
inline Rat rpow(const Rat& base, int exp) {
    if (exp == 0) return Rat(1);
    if (base == 0 && exp < 0) throw std::domain_error("0 raised to a negative power");
    Rat acc(1);
    Rat b = exp > 0 ? base : Rat(1 / base);
    for (int i = 0; i < (exp > 0 ? exp : -exp); ++i) acc *= b;
    return acc;
}

}  // namespace rch
