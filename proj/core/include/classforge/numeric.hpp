#ifndef CLASSFORGE_NUMERIC_HPP
#define CLASSFORGE_NUMERIC_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "classforge/errors.hpp"

namespace classforge {

// Exact arithmetic substrate.  Integer is canonical-sign arbitrary precision;
// Rational is always in lowest terms with positive denominator (GMP keeps the
// canonical form through arithmetic).
using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Integer& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sign(const Rational& a) { return mpq_sgn(a.get_mpq_t()); }

inline Integer abs_i(const Integer& a) { return Integer(abs(a)); }
inline Rational abs_q(const Rational& a) { return Rational(abs(a)); }

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// a mod m reduced into [0, m); m > 0.
Integer floor_mod(const Integer& a, const Integer& m);

/// floor(a / b) for b != 0.
Integer floor_div(const Integer& a, const Integer& b);

/// a^e for e >= 0.
Integer pow_i(const Integer& a, unsigned long e);

/// floor(sqrt(a)) for a >= 0.
Integer isqrt(const Integer& a);

bool is_perfect_square(const Integer& a);

/// Quotient of an exact division; throws identity_violation if b does not divide a.
Integer divexact(const Integer& a, const Integer& b);

size_t bit_length(const Integer& a);

/// Parses an optionally signed decimal string.  Throws malformed_certificate on
/// anything else (this is the wire-format entry point).
Integer parse_decimal(std::string_view s);

std::string to_string(const Integer& a);
std::string to_string(const Rational& a);

/// num/den in lowest terms, den > 0; throws on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

inline Integer numerator(const Rational& q) { return Integer(q.get_num()); }
inline Integer denominator(const Rational& q) { return Integer(q.get_den()); }

Integer floor_q(const Rational& q);
Integer ceil_q(const Rational& q);

} // namespace classforge

#endif
