#pragma once

// Truncated Laurent series in one variable t with dense coefficients.
//
// A Series<Scalar> stores the coefficients of t^v .. t^d and an order N: every
// coefficient of t^k with k <= N is known, the remainder is O(t^{N+1}). Finite
// polynomials are "exact" and carry order kExactOrder. Arithmetic propagates
// orders the usual way (relative precision for products and quotients), so a
// result never claims more coefficients than its operands determine.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "wedge/precfloat.hpp"
#include "wedge/rational.hpp"

namespace wedge::exact {

inline constexpr int kExactOrder = 1 << 28;

class SeriesError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {
inline int clamp_order(long long order) {
  if (order >= kExactOrder) return kExactOrder;
  if (order <= -kExactOrder) return -kExactOrder;
  return static_cast<int>(order);
}

template <class Scalar>
bool is_zero_scalar(const Scalar& value) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return sgn(value) == 0;
  } else {
    return value == 0;
  }
}
}  // namespace detail

template <class Scalar>
class Series {
 public:
  using scalar_type = Scalar;

  /// The exact zero series.
  Series() = default;

  /// Coefficients of t^valuation, t^{valuation+1}, ... known through t^order.
  Series(int valuation, std::vector<Scalar> coeffs, int order)
      : valuation_(valuation), coeffs_(std::move(coeffs)), order_(detail::clamp_order(order)) {
    const long long last = static_cast<long long>(valuation_) + static_cast<long long>(coeffs_.size()) - 1;
    if (!coeffs_.empty() && last > order_) {
      coeffs_.resize(static_cast<std::size_t>(std::max<long long>(0, order_ - valuation_ + 1)));
    }
    normalize();
  }

  static Series constant(Scalar c) { return Series(0, {std::move(c)}, kExactOrder); }
  static Series monomial(Scalar c, int exponent) { return Series(exponent, {std::move(c)}, kExactOrder); }
  static Series polynomial(std::vector<Scalar> coeffs, int valuation = 0) {
    return Series(valuation, std::move(coeffs), kExactOrder);
  }
  /// The series t.
  static Series variable() { return monomial(Scalar(1), 1); }
  /// O(t^{order+1}).
  static Series zero(int order) { return Series(0, {}, order); }

  bool is_exact() const { return order_ >= kExactOrder; }
  bool is_zero() const { return coeffs_.empty(); }
  int order() const { return order_; }

  /// Exponent of the first nonzero coefficient; order + 1 for a zero series.
  int valuation() const { return is_zero() ? detail::clamp_order(1LL + order_) : valuation_; }
  /// Exponent of the last stored (nonzero) coefficient.
  int degree() const { return valuation_ + static_cast<int>(coeffs_.size()) - 1; }

  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  const Scalar& leading() const {
    if (is_zero()) throw SeriesError("leading coefficient of a zero series");
    return coeffs_.front();
  }

  /// Coefficient of t^k. Throws when k lies beyond the known order.
  Scalar coeff(int k) const {
    if (k > order_) {
      throw SeriesError("coefficient of t^" + std::to_string(k) + " requested beyond order " +
                        std::to_string(order_));
    }
    if (is_zero() || k < valuation_ || k > degree()) return Scalar(0);
    return coeffs_[static_cast<std::size_t>(k - valuation_)];
  }
  Scalar operator[](int k) const { return coeff(k); }

  /// Drops every coefficient above t^order; the result is inexact.
  Series truncated(int order) const {
    if (order > order_) {
      throw SeriesError("cannot raise order from " + std::to_string(order_) + " to " + std::to_string(order));
    }
    return Series(valuation_, coeffs_, order);
  }

  /// Multiplies by t^k.
  Series shifted(int k) const {
    Series out = *this;
    out.valuation_ += k;
    if (!is_exact()) out.order_ = detail::clamp_order(static_cast<long long>(order_) + k);
    return out;
  }

  Series operator-() const {
    Series out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  Series& operator+=(const Series& other) { return *this = *this + other; }
  Series& operator-=(const Series& other) { return *this = *this - other; }
  Series& operator*=(const Series& other) { return *this = *this * other; }
  Series& operator/=(const Series& other) { return *this = *this / other; }

  friend Series operator+(const Series& a, const Series& b) { return add(a, b, false); }
  friend Series operator-(const Series& a, const Series& b) { return add(a, b, true); }
  friend Series operator*(const Series& a, const Series& b) { return multiply(a, b); }
  friend Series operator/(const Series& a, const Series& b) { return divide(a, b); }

  friend Series operator*(const Series& a, const Scalar& c) {
    Series out = a;
    for (auto& x : out.coeffs_) x *= c;
    out.normalize();
    return out;
  }
  friend Series operator*(const Scalar& c, const Series& a) { return a * c; }
  friend Series operator+(const Series& a, const Scalar& c) { return a + Series::constant(c); }
  friend Series operator+(const Scalar& c, const Series& a) { return Series::constant(c) + a; }
  friend Series operator-(const Series& a, const Scalar& c) { return a - Series::constant(c); }
  friend Series operator-(const Scalar& c, const Series& a) { return Series::constant(c) - a; }
  friend Series operator/(const Series& a, const Scalar& c) {
    if (detail::is_zero_scalar(c)) throw SeriesError("division of a series by zero scalar");
    Series out = a;
    for (auto& x : out.coeffs_) x /= c;
    return out;
  }

  /// Same order and the same coefficients.
  friend bool operator==(const Series& a, const Series& b) {
    return a.order_ == b.order_ && a.valuation() == b.valuation() && a.coeffs_ == b.coeffs_;
  }

 private:
  static Series add(const Series& a, const Series& b, bool subtract);
  static Series multiply(const Series& a, const Series& b);
  static Series divide(const Series& a, const Series& b);

  void normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && detail::is_zero_scalar(coeffs_[lead])) ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      valuation_ = 0;
      return;
    }
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
      valuation_ += static_cast<int>(lead);
    }
    while (!coeffs_.empty() && detail::is_zero_scalar(coeffs_.back())) coeffs_.pop_back();
  }

  int valuation_ = 0;
  std::vector<Scalar> coeffs_;
  int order_ = kExactOrder;
};

using TSeries = Series<Rational>;

namespace detail {

// Integer convolution of rational coefficient vectors: both operands are scaled to
// a common denominator so the inner loop is mpz multiply-accumulate only.
inline std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                      std::size_t count) {
  BigInt den_a = 1;
  BigInt den_b = 1;
  for (const auto& x : a) mpz_lcm(den_a.get_mpz_t(), den_a.get_mpz_t(), x.get_den_mpz_t());
  for (const auto& x : b) mpz_lcm(den_b.get_mpz_t(), den_b.get_mpz_t(), x.get_den_mpz_t());
  std::vector<BigInt> ia(a.size());
  std::vector<BigInt> ib(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) ia[i] = a[i].get_num() * (den_a / a[i].get_den());
  for (std::size_t i = 0; i < b.size(); ++i) ib[i] = b[i].get_num() * (den_b / b[i].get_den());
  const BigInt den = den_a * den_b;
  std::vector<Rational> out(count);
  BigInt acc;
  for (std::size_t k = 0; k < count; ++k) {
    acc = 0;
    const std::size_t lo = k >= b.size() ? k - b.size() + 1 : 0;
    const std::size_t hi = std::min(k, a.size() - 1);
    for (std::size_t i = lo; i <= hi; ++i) {
      mpz_addmul(acc.get_mpz_t(), ia[i].get_mpz_t(), ib[k - i].get_mpz_t());
    }
    out[k] = Rational(acc, den);
    out[k].canonicalize();
  }
  return out;
}

template <class Scalar>
std::vector<Scalar> convolve(const std::vector<Scalar>& a, const std::vector<Scalar>& b, std::size_t count) {
  std::vector<Scalar> out(count, Scalar(0));
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t lo = k >= b.size() ? k - b.size() + 1 : 0;
    const std::size_t hi = std::min(k, a.size() - 1);
    for (std::size_t i = lo; i <= hi; ++i) out[k] += a[i] * b[k - i];
  }
  return out;
}

// Truncated product of two coefficient vectors (constant terms first).
template <class Scalar>
std::vector<Scalar> mul_trunc(const std::vector<Scalar>& a, const std::vector<Scalar>& b, std::size_t count) {
  if (a.empty() || b.empty()) return std::vector<Scalar>(count, Scalar(0));
  count = std::min(count, a.size() + b.size() - 1);
  return convolve(a, b, count);
}

// Newton iteration for 1/u with u[0] == 1, returning `count` coefficients.
template <class Scalar>
std::vector<Scalar> newton_inverse(const std::vector<Scalar>& u, std::size_t count) {
  std::vector<Scalar> g{Scalar(1) / u[0]};
  std::size_t have = 1;
  while (have < count) {
    have = std::min(count, 2 * have);
    std::vector<Scalar> head(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(std::min(have, u.size())));
    auto ug = mul_trunc(head, g, have);
    ug.resize(have, Scalar(0));
    for (auto& c : ug) c = -c;
    ug[0] += Scalar(2);
    g = mul_trunc(g, ug, have);
    g.resize(have, Scalar(0));
  }
  g.resize(count, Scalar(0));
  return g;
}

// Newton iteration for 1/sqrt(u) with u[0] == 1.
template <class Scalar>
std::vector<Scalar> newton_inverse_sqrt(const std::vector<Scalar>& u, std::size_t count) {
  std::vector<Scalar> y{Scalar(1)};
  std::size_t have = 1;
  while (have < count) {
    have = std::min(count, 2 * have);
    std::vector<Scalar> head(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(std::min(have, u.size())));
    auto y2 = mul_trunc(y, y, have);
    auto uy2 = mul_trunc(head, y2, have);
    uy2.resize(have, Scalar(0));
    // y <- y + y (1 - u y^2) / 2
    for (auto& c : uy2) c = -c;
    uy2[0] += Scalar(1);
    for (auto& c : uy2) c /= Scalar(2);
    auto corr = mul_trunc(y, uy2, have);
    corr.resize(have, Scalar(0));
    y.resize(have, Scalar(0));
    for (std::size_t i = 0; i < have; ++i) y[i] += corr[i];
  }
  y.resize(count, Scalar(0));
  return y;
}

// Relative precision (number of known coefficients past the valuation, minus one).
template <class Scalar>
long long relative_precision(const Series<Scalar>& s) {
  if (s.is_exact()) return kExactOrder;
  return static_cast<long long>(s.order()) - s.valuation();
}

}  // namespace detail

template <class Scalar>
Series<Scalar> Series<Scalar>::add(const Series& a, const Series& b, bool subtract) {
  const int order = std::min(a.order_, b.order_);
  if (a.is_zero() && b.is_zero()) return Series(0, {}, order);
  int lo = std::numeric_limits<int>::max();
  int hi = std::numeric_limits<int>::min();
  for (const Series* s : {&a, &b}) {
    if (s->is_zero()) continue;
    lo = std::min(lo, s->valuation_);
    hi = std::max(hi, s->degree());
  }
  hi = std::min(hi, order);
  if (hi < lo) return Series(0, {}, order);
  std::vector<Scalar> out(static_cast<std::size_t>(hi - lo + 1), Scalar(0));
  for (int k = lo; k <= hi; ++k) {
    Scalar value = Scalar(0);
    if (!a.is_zero() && k >= a.valuation_ && k <= a.degree()) value = a.coeffs_[k - a.valuation_];
    if (!b.is_zero() && k >= b.valuation_ && k <= b.degree()) {
      if (subtract) {
        value -= b.coeffs_[k - b.valuation_];
      } else {
        value += b.coeffs_[k - b.valuation_];
      }
    }
    out[static_cast<std::size_t>(k - lo)] = std::move(value);
  }
  return Series(lo, std::move(out), order);
}

template <class Scalar>
Series<Scalar> Series<Scalar>::multiply(const Series& a, const Series& b) {
  const long long va = a.valuation();
  const long long vb = b.valuation();
  const long long oa = a.is_exact() ? static_cast<long long>(kExactOrder) * 4 : a.order_;
  const long long ob = b.is_exact() ? static_cast<long long>(kExactOrder) * 4 : b.order_;
  const int order = detail::clamp_order(std::min(oa + vb, ob + va));
  if (a.is_zero() || b.is_zero()) return Series(0, {}, order);
  const long long top = std::min<long long>(order, static_cast<long long>(a.degree()) + b.degree());
  if (top < va + vb) return Series(0, {}, order);
  const auto count = static_cast<std::size_t>(top - (va + vb) + 1);
  auto out = detail::mul_trunc(a.coeffs_, b.coeffs_, count);
  return Series(static_cast<int>(va + vb), std::move(out), order);
}

/// 1/b with the same relative precision as b. Exact polynomials need an explicit order:
/// truncate them first.
template <class Scalar>
Series<Scalar> inverse(const Series<Scalar>& b) {
  if (b.is_zero()) throw SeriesError("division by a series that is identically zero to its order");
  const int vb = b.valuation();
  if (b.is_exact()) {
    if (b.coeffs().size() == 1) {
      return Series<Scalar>::monomial(Scalar(1) / b.leading(), -vb);
    }
    throw SeriesError("inverse of an exact polynomial needs an explicit truncation order");
  }
  const long long rel = static_cast<long long>(b.order()) - vb;
  if (rel < 0) throw SeriesError("order underflow in inverse");
  const auto count = static_cast<std::size_t>(rel + 1);
  std::vector<Scalar> u(b.coeffs());
  const Scalar lead = u.front();
  for (auto& c : u) c /= lead;
  u.resize(std::min(u.size(), count), Scalar(0));
  auto g = detail::newton_inverse(u, count);
  for (auto& c : g) c /= lead;
  return Series<Scalar>(-vb, std::move(g), static_cast<int>(-vb + rel));
}

template <class Scalar>
Series<Scalar> Series<Scalar>::divide(const Series& a, const Series& b) {
  if (b.is_zero()) throw SeriesError("division by a series that is identically zero to its order");
  const int vb = b.valuation();
  if (b.is_exact() && b.coeffs_.size() == 1) {
    return a.shifted(-vb) / b.leading();
  }
  if (a.is_exact() && b.is_exact()) {
    throw SeriesError("quotient of exact polynomials needs an explicit truncation order");
  }
  if (a.is_zero()) return Series(0, {}, detail::clamp_order(static_cast<long long>(a.order_) - vb));
  const long long rel = std::min(detail::relative_precision(a), detail::relative_precision(b));
  if (rel < 0) throw SeriesError("order underflow in division");
  const long long val = static_cast<long long>(a.valuation()) - vb;
  const Series bt = b.is_exact() ? b.truncated(static_cast<int>(vb + rel)) : b.truncated(static_cast<int>(std::min<long long>(b.order_, vb + rel)));
  const Series inv = inverse(bt);
  const Series at = a.is_exact() ? a.truncated(static_cast<int>(a.valuation() + rel))
                                 : a.truncated(static_cast<int>(std::min<long long>(a.order_, a.valuation() + rel)));
  Series q = at * inv;
  return q.truncated(static_cast<int>(std::min<long long>(q.order(), val + rel)));
}

/// Square root with positive leading coefficient. The valuation must be even and, for
/// rational coefficients, the leading coefficient a rational square.
template <class Scalar>
Series<Scalar> sqrt(const Series<Scalar>& a) {
  if (a.is_zero()) {
    if (a.is_exact()) return a;
    return Series<Scalar>::zero((a.order() + 1) / 2 - 1);
  }
  const int va = a.valuation();
  if (va % 2 != 0) throw SeriesError("square root of a series with odd valuation " + std::to_string(va));
  Scalar root;
  if constexpr (std::is_same_v<Scalar, Rational>) {
    if (!rational_square_root(a.leading(), root)) {
      throw SeriesError("square root: leading coefficient " + to_string(a.leading()) + " is not a rational square");
    }
  } else {
    if (!(a.leading() > 0)) throw SeriesError("square root: leading coefficient is not positive");
    using std::sqrt;
    using boost::multiprecision::sqrt;
    root = sqrt(a.leading());
  }
  if (a.is_exact()) {
    if (a.coeffs().size() == 1) return Series<Scalar>::monomial(root, va / 2);
    throw SeriesError("square root of an exact polynomial needs an explicit truncation order");
  }
  const long long rel = static_cast<long long>(a.order()) - va;
  const auto count = static_cast<std::size_t>(rel + 1);
  std::vector<Scalar> u(a.coeffs());
  const Scalar lead = u.front();
  for (auto& c : u) c /= lead;
  u.resize(std::min(u.size(), count), Scalar(0));
  auto y = detail::newton_inverse_sqrt(u, count);
  auto s = detail::mul_trunc(u, y, count);
  for (auto& c : s) c *= root;
  return Series<Scalar>(va / 2, std::move(s), static_cast<int>(va / 2 + rel));
}

/// a^k for any integer k (negative powers need an inexact or monomial base).
template <class Scalar>
Series<Scalar> pow(const Series<Scalar>& a, int k) {
  if (k < 0) return inverse(pow(a, -k));
  Series<Scalar> result = Series<Scalar>::constant(Scalar(1));
  Series<Scalar> base = a;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

/// A(s): substitutes the series s for t in A. Requires val(s) >= 1 unless A is a
/// polynomial with nonnegative exponents.
template <class Scalar>
Series<Scalar> compose(const Series<Scalar>& a, const Series<Scalar>& s) {
  if (a.is_zero()) return a;
  const bool polynomial = a.is_exact() && a.valuation() >= 0;
  if (!polynomial && s.valuation() < 1) {
    throw SeriesError("substitution needs an inner series of positive valuation");
  }
  // Horner over the stored coefficients.
  Series<Scalar> acc;
  for (int k = a.degree(); k >= std::max(0, a.valuation()); --k) {
    acc = acc * s + Series<Scalar>::constant(a.coeff(k));
  }
  if (a.valuation() > 0) acc = acc * pow(s, a.valuation());
  if (a.valuation() < 0) {
    const Series<Scalar> inv = inverse(s);
    Series<Scalar> power = inv;
    for (int k = -1; k >= a.valuation(); --k) {
      if (k <= a.degree()) acc = acc + power * a.coeff(k);
      if (k > a.valuation()) power = power * inv;
    }
  }
  if (!a.is_exact()) {
    const long long unknown = (static_cast<long long>(a.order()) + 1) * s.valuation() - 1;
    if (unknown < acc.order()) acc = acc.truncated(detail::clamp_order(unknown));
  }
  return acc;
}

/// Exact finite sum of coeff * x^k over the stored coefficients.
template <class Scalar, class Point>
Point evaluate(const Series<Scalar>& a, const Point& x) {
  if (a.is_zero()) return Point(0);
  if (a.valuation() < 0 && x == 0) throw SeriesError("negative-valuation series evaluated at zero");
  auto lift = [](const Scalar& c) {
    if constexpr (std::is_same_v<Point, PrecFloat> && std::is_same_v<Scalar, Rational>) {
      return to_prec(c);
    } else {
      return Point(c);
    }
  };
  Point power(1);
  for (int i = 0; i < std::abs(a.valuation()); ++i) power *= x;
  if (a.valuation() < 0) power = Point(1) / power;
  Point acc(0);
  for (int k = a.valuation(); k <= a.degree(); ++k) {
    acc += lift(a.coeff(k)) * power;
    power *= x;
  }
  return acc;
}

/// First exponent k <= upto at which a and b differ; nullopt when they agree.
/// Throws when either series is not known through t^upto.
template <class Scalar>
std::optional<int> first_difference(const Series<Scalar>& a, const Series<Scalar>& b, int upto) {
  if (a.order() < upto || b.order() < upto) {
    throw SeriesError("comparison through t^" + std::to_string(upto) + " exceeds known orders " +
                      std::to_string(a.order()) + " and " + std::to_string(b.order()));
  }
  const int lo = std::min(a.is_zero() ? upto + 1 : a.valuation(), b.is_zero() ? upto + 1 : b.valuation());
  for (int k = lo; k <= upto; ++k) {
    if (!(a.coeff(k) == b.coeff(k))) return k;
  }
  return std::nullopt;
}

/// Human-readable rendering, e.g. "1 + 3*t + 7*t^2 + O(t^5)".
template <class Scalar>
std::string to_string(const Series<Scalar>& a) {
  std::ostringstream out;
  bool first = true;
  for (int k = a.valuation(); !a.is_zero() && k <= a.degree(); ++k) {
    Scalar c = a.coeff(k);
    if (detail::is_zero_scalar(c)) continue;
    std::string text;
    if constexpr (std::is_same_v<Scalar, Rational>) {
      text = to_string(c);
    } else {
      text = c.str();
    }
    bool negative = !text.empty() && text.front() == '-';
    if (negative) text.erase(0, 1);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = text == "1";
    if (k == 0) {
      out << text;
    } else {
      if (!unit) out << text << '*';
      out << 't';
      if (k != 1) out << '^' << k;
    }
  }
  if (first) out << '0';
  if (!a.is_exact()) out << " + O(t^" << a.order() + 1 << ')';
  return out.str();
}

}  // namespace wedge::exact
