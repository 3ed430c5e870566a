#pragma once

// Configurable-precision floating point for numeric constants.
//
// PrecFloat is an MPFR number whose precision is carried by each value. The
// working precision for newly created values is set with ScopedDigits.

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "wedge/rational.hpp"

namespace wedge::exact {

using PrecFloat = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultDigits = 30;

/// Working precision from the WEDGE_DIGITS environment variable, or kDefaultDigits.
unsigned default_digits_from_env();

/// Sets the default decimal precision for new PrecFloat values; restores it on exit.
class ScopedDigits {
 public:
  explicit ScopedDigits(unsigned digits);
  ~ScopedDigits();
  ScopedDigits(const ScopedDigits&) = delete;
  ScopedDigits& operator=(const ScopedDigits&) = delete;

 private:
  unsigned previous_;
};

PrecFloat to_prec(const Rational& value);
PrecFloat to_prec(const BigInt& value);

/// Fixed-point decimal rendering with the requested number of significant digits.
std::string to_decimal(const PrecFloat& value, unsigned significant_digits);

/// 1 + sqrt(2) at the current working precision.
PrecFloat growth_constant();

/// Number of leading significant digits on which value and reference agree.
double agreeing_digits(const PrecFloat& value, const PrecFloat& reference);

}  // namespace wedge::exact
