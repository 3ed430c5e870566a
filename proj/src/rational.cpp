#include "wedge/rational.hpp"

#include <string>

namespace wedge::exact {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  Rational value;
  if (value.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
  if (value.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_string(const BigInt& value) { return value.get_str(10); }

bool rational_square_root(const Rational& value, Rational& root) {
  if (sgn(value) < 0) return false;
  if (mpz_perfect_square_p(value.get_num_mpz_t()) == 0 || mpz_perfect_square_p(value.get_den_mpz_t()) == 0) {
    return false;
  }
  BigInt num;
  BigInt den;
  mpz_sqrt(num.get_mpz_t(), value.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), value.get_den_mpz_t());
  root = Rational(num, den);
  root.canonicalize();
  return true;
}

}  // namespace wedge::exact
