#pragma once

// Exact integer and rational scalars backed by GMP.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace wedge::exact {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is one, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

/// True when value is the square of a rational; on success root receives the positive root.
bool rational_square_root(const Rational& value, Rational& root);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace wedge::exact
