#pragma once

// Exact scalars. Integers and rationals are GMP values; mpq_class keeps
// itself canonical (lowest terms, positive denominator) under arithmetic.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace motzkin {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses a decimal integer with optional leading sign. Throws std::invalid_argument.
Integer parse_integer(std::string_view text);

/// Parses "p", "-p" or "p/q". The result is canonicalized; q == 0 throws.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);

/// "p" when the denominator is one, otherwise "p/q".
std::string to_string(const Rational& value);

inline bool is_integral(const Rational& value) { return value.get_den() == 1; }

}  // namespace motzkin
