#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace stein {

/// Exact rational number. GMP keeps every value canonical (gcd 1, positive
/// denominator) after each arithmetic operation.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Throws DomainError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& value);

Rational factorial(int n);

/// p/q in canonical form; q must be non-zero.
Rational frac(long p, long q);

inline int sign_of(const Rational& value) { return sgn(value); }

} // namespace stein
