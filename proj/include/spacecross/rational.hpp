#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace spacecross {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p" or "p/q" (decimal integers, q > 0) into a canonical Rational.
/// Decimal points and exponents are rejected so the codec never rounds.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" with q > 0, always including the denominator.
std::string to_string(const Rational& r);

inline int sign(const Rational& r) { return sgn(r); }
inline int sign(const Integer& z) { return sgn(z); }

/// 2^e as an exact Rational (e may be negative).
Rational pow2(long e);

/// True iff r is the square of a rational; on success writes the root.
bool rational_sqrt(const Rational& r, Rational& root);

}  // namespace spacecross
