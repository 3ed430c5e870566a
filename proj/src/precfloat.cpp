#include "wedge/precfloat.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace wedge::exact {

unsigned default_digits_from_env() {
  if (const char* env = std::getenv("WEDGE_DIGITS")) {
    try {
      const int value = std::stoi(env);
      if (value >= 10 && value <= 2000) return static_cast<unsigned>(value);
    } catch (const std::exception&) {
    }
  }
  return kDefaultDigits;
}

ScopedDigits::ScopedDigits(unsigned digits) : previous_(PrecFloat::default_precision()) {
  PrecFloat::default_precision(digits);
}

ScopedDigits::~ScopedDigits() { PrecFloat::default_precision(previous_); }

PrecFloat to_prec(const Rational& value) {
  PrecFloat out;
  mpfr_set_q(out.backend().data(), value.get_mpq_t(), MPFR_RNDN);
  return out;
}

PrecFloat to_prec(const BigInt& value) {
  PrecFloat out;
  mpfr_set_z(out.backend().data(), value.get_mpz_t(), MPFR_RNDN);
  return out;
}

std::string to_decimal(const PrecFloat& value, unsigned significant_digits) {
  return value.str(static_cast<std::streamsize>(significant_digits), std::ios_base::fmtflags(0));
}

PrecFloat growth_constant() { return PrecFloat(1) + boost::multiprecision::sqrt(PrecFloat(2)); }

double agreeing_digits(const PrecFloat& value, const PrecFloat& reference) {
  if (value == reference) return static_cast<double>(PrecFloat::default_precision());
  const PrecFloat rel = boost::multiprecision::abs((value - reference) / reference);
  return -static_cast<double>(boost::multiprecision::log10(rel));
}

}  // namespace wedge::exact
