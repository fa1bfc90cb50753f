#pragma once

#include <gmpxx.h>

#include <string>

namespace cyq {

// Arbitrary-precision integers and rationals. Rationals are kept canonical
// (lowest terms, positive denominator); every helper below canonicalizes.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

// "n" or "n/d", denominator omitted when 1.
inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

unsigned long totient(unsigned long n);
bool is_prime(unsigned long n);
long mod_inverse(long k, unsigned long n);  // k a unit mod n

}  // namespace cyq
