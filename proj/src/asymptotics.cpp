#include "wedge/asymptotics.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "wedge/closedform.hpp"
#include "wedge/walks.hpp"

namespace wedge::asymptotics {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::pow;
using boost::multiprecision::sqrt;
using exact::ScopedDigits;
using exact::to_decimal;
using exact::to_prec;

PrecFloat pi() { return boost::math::constants::pi<PrecFloat>(); }
PrecFloat t_crit() { return sqrt(PrecFloat(2)) - 1; }
PrecFloat mu() { return exact::growth_constant(); }

// Terms below this are dropped from the rapidly convergent sums.
PrecFloat negligible() { return pow(PrecFloat(10), -static_cast<int>(PrecFloat::default_precision()) - 5); }

std::string fmt(const PrecFloat& x, unsigned digits = 20) { return to_decimal(x, digits); }

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(6);
  out << x;
  return out.str();
}

// Exact counts shared between fits; the DP at n = 400 is the dominant cost.
const std::vector<BigInt>& cached_counts(enumerate::ModelKind kind, int n_max) {
  static std::mutex mutex;
  static std::map<enumerate::ModelKind, std::vector<BigInt>> cache;
  std::lock_guard lock(mutex);
  auto& counts = cache[kind];
  if (static_cast<int>(counts.size()) <= n_max) {
    counts = enumerate::count_walks(enumerate::WedgeModel{kind, 1}, n_max).counts;
  }
  return counts;
}

PrecFloat coefficient(const exact::TSeries& s, int n) { return to_prec(s.coeff(n)); }

// S(t) = sum_n (-1)^n t^{n^2} q^n.
PrecFloat theta_sym(const PrecFloat& t, const PrecFloat& q) {
  PrecFloat sum = 0;
  for (int n = 0;; ++n) {
    const PrecFloat term = pow(t, n * n) * pow(q, n);
    sum += (n % 2 == 0) ? term : PrecFloat(-term);
    if (abs(term) < negligible() && n > 2) return sum;
  }
}

PrecFloat g1_residue_numerator(const PrecFloat& t) {
  const PrecFloat r = sqrt((1 - t * t) * (1 - 5 * t * t));
  const PrecFloat q = (1 - 3 * t * t - r) / (2 * t);
  return (1 + t) - (1 - t * t - r) / t * theta_sym(t, q);
}

// T(t,q) = sum_n r_n (q/t)^{2n} t^{2n^2}, r_n = (1 - t^{2n-1} q)/(1 + t^{2n-1} q), and dT/dq.
void theta_asym_with_derivative(const PrecFloat& t, const PrecFloat& q, PrecFloat& value, PrecFloat& derivative) {
  value = 0;
  derivative = 0;
  for (int n = 0;; ++n) {
    const PrecFloat u = pow(t, 2 * n - 1);
    const PrecFloat r = (1 - u * q) / (1 + u * q);
    const PrecFloat dr = -2 * u / ((1 + u * q) * (1 + u * q));
    const PrecFloat g = pow(t, 2 * n * n);
    const PrecFloat w = pow(q / t, 2 * n);
    const PrecFloat dw = (n == 0) ? PrecFloat(0) : PrecFloat(2 * n * pow(q, 2 * n - 1) / pow(t, 2 * n));
    value += r * w * g;
    derivative += (dr * w + r * dw) * g;
    if (abs(w * g) < negligible() && n > 2) return;
  }
}

PrecFloat b0_horizontal_analytic() {
  const PrecFloat t = t_crit();
  const PrecFloat q = 3 - 2 * sqrt(PrecFloat(2));
  PrecFloat value, derivative;
  theta_asym_with_derivative(t, q, value, derivative);
  const PrecFloat f_q = value + q * derivative;
  return (1 - t * t) * sqrt(1 - pow(t, 4)) * f_q /
         (2 * t * t * sqrt(2 * sqrt(PrecFloat(2)) * t) * sqrt(pi()));
}

// c G(t) with G(t) = [S/t + (1-t^2)/(2t^2) S'(Q0)]/(1 - 2t - t^2), Q0 = (1 - 3t^2)/(2t).
PrecFloat branch_point_constant(const PrecFloat& t) {
  const PrecFloat q0 = (1 - 3 * t * t) / (2 * t);
  PrecFloat s = 0;
  PrecFloat ds = 0;
  for (int n = 0;; ++n) {
    const PrecFloat sign = (n % 2 == 0) ? PrecFloat(1) : PrecFloat(-1);
    const PrecFloat g = pow(t, n * n);
    s += sign * g * pow(q0, n);
    if (n > 0) ds += sign * n * g * pow(q0, n - 1);
    if (abs(g) < negligible() && n > 2) break;
  }
  const PrecFloat big_g = (s / t + (1 - t * t) / (2 * t * t) * ds) / (1 - 2 * t - t * t);
  return -sqrt(2 / (5 * pi())) * big_g;
}

AsymptoticReport make_report(std::string name, Method method, PrecFloat value, std::string reference,
                             unsigned digits) {
  AsymptoticReport r;
  r.name = std::move(name);
  r.method = method;
  r.value = std::move(value);
  r.reference_text = std::move(reference);
  r.digits = digits;
  return r;
}

unsigned checked_digits(unsigned digits) {
  if (digits < 15 || digits > 200) throw std::invalid_argument("digits must lie in 15..200");
  return digits;
}

std::vector<double> integer_exponents(int corrections) {
  std::vector<double> e;
  for (int j = 0; j <= corrections; ++j) e.push_back(j);
  return e;
}

}  // namespace

std::string to_string(Method method) { return method == Method::analytic ? "analytic" : "fit"; }

Method parse_method(const std::string& text) {
  if (text == "analytic") return Method::analytic;
  if (text == "fit") return Method::fit;
  throw std::invalid_argument("unknown method '" + text + "' (expected analytic or fit)");
}

PrecFloat decimal(const char* text) { return PrecFloat(text); }

PrecFloat AsymptoticReport::abs_error() const {
  if (!has_reference()) return PrecFloat(0);
  return abs(value - PrecFloat(reference_text));
}

double AsymptoticReport::agreeing_digits() const {
  if (!has_reference()) return 0;
  return exact::agreeing_digits(value, PrecFloat(reference_text));
}

PrecFloat scaled_g1_near_pole(const PrecFloat& epsilon) {
  const PrecFloat t = t_crit() * (1 - epsilon);
  const PrecFloat d = 1 - 2 * t - t * t;
  return epsilon * g1_residue_numerator(t) / d;
}

namespace {

AsymptoticReport a0_report(unsigned digits) {
  ScopedDigits scope(digits + 10);
  const PrecFloat t = t_crit();
  const PrecFloat value = g1_residue_numerator(t) / (2 * sqrt(PrecFloat(2)) * t);
  auto report = make_report("A0", Method::analytic, value, reference::kA0, digits);
  report.diagnostics.emplace_back("near_pole_value", fmt(scaled_g1_near_pole(PrecFloat("1e-8"))));
  report.diagnostics.emplace_back("corollary_upper_bound", fmt(mu() / 2));
  return report;
}

}  // namespace

AsymptoticReport constant_A0(unsigned digits) {
  if (digits > 50) throw std::invalid_argument("A0 supports at most 50 digits");
  return a0_report(std::max(digits, 15u));
}

std::pair<AsymptoticReport, AsymptoticReport> constants_A1A2(Method method, unsigned digits, int n_max) {
  checked_digits(digits);
  if (method == Method::analytic) {
    ScopedDigits scope(digits + 10);
    const PrecFloat x = 1 / sqrt(PrecFloat(5));
    auto a1 = make_report("A1", method, branch_point_constant(x), reference::kA1, digits);
    auto a2 = make_report("A2", method, branch_point_constant(-x), reference::kA2, digits);
    return {a1, a2};
  }
  if (n_max < 40) throw std::invalid_argument("A1/A2 fit needs n_max >= 40");
  // The residual v_n - A0 mu^n loses about n log10(mu/sqrt 5) digits.
  const unsigned working = std::max(digits, 30u) + static_cast<unsigned>(n_max / 20) + 10;
  ScopedDigits scope(working);
  const auto& v = cached_counts(enumerate::ModelKind::symmetric, n_max);
  const PrecFloat a0 = g1_residue_numerator(t_crit()) / (2 * sqrt(PrecFloat(2)) * t_crit());
  const PrecFloat m = mu();
  const PrecFloat root5 = sqrt(PrecFloat(5));
  auto y = [&](int n) -> PrecFloat {
    return (to_prec(v[n]) - a0 * pow(m, n)) * pow(PrecFloat(n + 1), PrecFloat(3) / 2) / pow(root5, n);
  };
  constexpr int kCorrections = 6;
  const FitResult fit = least_squares_fit(y, n_max / 2, n_max, integer_exponents(kCorrections), true, 1);
  auto a1 = make_report("A1", method, fit.plain[0], reference::kA1, working);
  auto a2 = make_report("A2", method, fit.parity[0], reference::kA2, working);
  for (auto* r : {&a1, &a2}) {
    r->n_range = std::make_pair(fit.n_lo, fit.n_hi);
    r->corrections = kCorrections;
    r->diagnostics.emplace_back("basis", "(1 + (-1)^n) / (n+1)^j, j = 0.." + std::to_string(kCorrections));
  }
  a1.diagnostics.emplace_back("raw_y_n_max", fmt(y(n_max)));
  a1.diagnostics.emplace_back("raw_y_n_max_minus_1", fmt(y(n_max - 1)));
  return {a1, a2};
}

std::vector<AccuracyRow> eq37_accuracy() {
  ScopedDigits scope(40);
  const auto& v = cached_counts(enumerate::ModelKind::symmetric, 40);
  const PrecFloat a0 = decimal(reference::kA0);
  const PrecFloat a1 = decimal(reference::kA1);
  const PrecFloat a2 = decimal(reference::kA2);
  const PrecFloat root5 = sqrt(PrecFloat(5));
  const std::vector<std::pair<int, double>> table = {{10, 0.07}, {20, 0.01}, {30, 0.002}, {40, 0.0006}};
  std::vector<AccuracyRow> rows;
  for (const auto& [n, bound] : table) {
    AccuracyRow row;
    row.n = n;
    row.exact = v[n];
    const PrecFloat sign = (n % 2 == 0) ? PrecFloat(1) : PrecFloat(-1);
    row.estimate = a0 * pow(mu(), n) + pow(root5, n) / pow(PrecFloat(n + 1), PrecFloat(3) / 2) * (a1 + sign * a2);
    row.relative_error = static_cast<double>(abs(row.estimate - to_prec(row.exact)) / to_prec(row.exact));
    row.bound = bound;
    rows.push_back(row);
  }
  return rows;
}

PrecFloat theta_partial_sum(int k_max) {
  const PrecFloat t = t_crit();
  PrecFloat sum = 0;
  for (int k = 0; k <= k_max; ++k) {
    const PrecFloat u = pow(t, 2 * k + 1);
    sum += (1 - u) / (1 + u) * pow(t, 2 * k * k + 2 * k);
  }
  return sum / sqrt(PrecFloat(2));
}

AsymptoticReport constant_theta(unsigned digits) {
  checked_digits(digits);
  ScopedDigits scope(digits + 10);
  // t_c^{2k^2} < 10^{-digits-10} once 2k^2 log10(1/t_c) exceeds that
  const int k_max = static_cast<int>(std::ceil(std::sqrt((digits + 10) / (2 * 0.3827)))) + 1;
  auto report = make_report("theta", Method::analytic, theta_partial_sum(k_max), reference::kTheta, digits);
  report.diagnostics.emplace_back("terms", std::to_string(k_max + 1));
  report.diagnostics.emplace_back("partial_k0", fmt(theta_partial_sum(0)));
  report.diagnostics.emplace_back("tail_after_k2", fmt(report.value - theta_partial_sum(2), 6));
  return report;
}

PrecFloat b0_ratio(int n) {
  const auto& w = cached_counts(enumerate::ModelKind::asymmetric, n);
  return to_prec(w[n]) * sqrt(PrecFloat(n)) / pow(mu(), n);
}

AsymptoticReport constant_B0(Method method, unsigned digits, int n_max) {
  checked_digits(digits);
  ScopedDigits scope(digits + 10);
  if (method == Method::analytic) {
    auto report = make_report("B0", method, mu() * b0_horizontal_analytic(), reference::kB0, digits);
    report.diagnostics.emplace_back("horizontal_constant", fmt(b0_horizontal_analytic()));
    return report;
  }
  if (n_max < 40) throw std::invalid_argument("B0 fit needs n_max >= 40");
  cached_counts(enumerate::ModelKind::asymmetric, n_max);
  constexpr int kCorrections = 6;
  const FitResult fit =
      least_squares_fit([](int n) -> PrecFloat { return b0_ratio(n); }, n_max / 2, n_max, integer_exponents(kCorrections), false);
  auto report = make_report("B0", method, fit.plain[0], reference::kB0, digits);
  report.n_range = std::make_pair(fit.n_lo, fit.n_hi);
  report.corrections = kCorrections;
  const PrecFloat target = decimal(reference::kB0);
  for (int n : {n_max / 4, n_max / 2, n_max}) {
    report.diagnostics.emplace_back("raw_ratio_" + std::to_string(n), fmt(b0_ratio(n), 12));
    report.diagnostics.emplace_back("raw_gap_" + std::to_string(n), fmt(abs(b0_ratio(n) - target), 6));
  }
  return report;
}

AsymptoticReport constant_B0_horizontal(Method method, unsigned digits, int n_max) {
  checked_digits(digits);
  ScopedDigits scope(digits + 10);
  if (method == Method::analytic) {
    return make_report("B0_horizontal", method, b0_horizontal_analytic(), reference::kB0Half, digits);
  }
  if (n_max < 40) throw std::invalid_argument("B0 fit needs n_max >= 40");
  // [t^n] h_1 = w_{n-1}
  const auto& w = cached_counts(enumerate::ModelKind::asymmetric, n_max);
  auto y = [&](int n) -> PrecFloat { return to_prec(w[n - 1]) * sqrt(PrecFloat(n)) / pow(mu(), n); };
  constexpr int kCorrections = 6;
  const FitResult fit = least_squares_fit(y, n_max / 2, n_max, integer_exponents(kCorrections), false);
  auto report = make_report("B0_horizontal", method, fit.plain[0], reference::kB0Half, digits);
  report.n_range = std::make_pair(fit.n_lo, fit.n_hi);
  report.corrections = kCorrections;
  return report;
}

ConsistencyCheck b0_consistency() {
  ScopedDigits scope(40);
  ConsistencyCheck check;
  check.product = decimal(reference::kB0Half) * mu();
  check.target = decimal(reference::kB0);
  check.agreeing_digits = exact::agreeing_digits(check.product, check.target);
  check.printed_digits = 18;
  return check;
}

PrecFloat halfplane_ratio(int n) {
  const auto& c = cached_counts(enumerate::ModelKind::halfplane, n);
  return to_prec(c[n]) * sqrt(PrecFloat(n)) / pow(mu(), n);
}

AsymptoticReport constant_halfplane(Method method, unsigned digits, int n_max) {
  checked_digits(digits);
  ScopedDigits scope(digits + 10);
  const PrecFloat closed = sqrt((7 + 5 * sqrt(PrecFloat(2))) / (2 * pi()));
  if (method == Method::analytic) {
    auto report = make_report("halfplane", method, closed, reference::kHalfplane, digits);
    return report;
  }
  if (n_max < 40) throw std::invalid_argument("half-plane fit needs n_max >= 40");
  cached_counts(enumerate::ModelKind::halfplane, n_max);
  constexpr int kCorrections = 6;
  const FitResult fit = least_squares_fit([](int n) -> PrecFloat { return halfplane_ratio(n); }, n_max / 2, n_max,
                                          integer_exponents(kCorrections), false);
  auto report = make_report("halfplane", method, fit.plain[0], reference::kHalfplane, digits);
  report.n_range = std::make_pair(fit.n_lo, fit.n_hi);
  report.corrections = kCorrections;
  report.diagnostics.emplace_back("closed_value", fmt(closed));
  report.diagnostics.emplace_back("raw_ratio_" + std::to_string(n_max), fmt(halfplane_ratio(n_max), 12));
  return report;
}

std::vector<AsymptoticReport> p_pieces_asymptotics(int n_max) {
  if (n_max < 40 || n_max > closedform::kMaxSeriesOrder) throw std::invalid_argument("n_max must lie in 40..1000");
  ScopedDigits scope(40);
  const closedform::HPieces pieces = closedform::asym_h1_pieces(n_max);
  const PrecFloat m = mu();
  const PrecFloat t = t_crit();
  const PrecFloat root5 = sqrt(PrecFloat(5));
  std::vector<AsymptoticReport> out;

  auto p1_formula = [&](int n) -> PrecFloat {
    const PrecFloat sign = (n % 2 == 0) ? PrecFloat(1) : PrecFloat(-1);
    return -sqrt(5 / (8 * pi())) * ((2 + root5) - sign * (root5 - 2)) * pow(root5, n) / pow(PrecFloat(n), PrecFloat(3) / 2);
  };
  {
    auto r = make_report("p1_ratio", Method::fit, coefficient(pieces.p1, n_max) / p1_formula(n_max), "1", 40);
    for (int n : {n_max / 4, n_max / 2, n_max - 1, n_max}) {
      r.diagnostics.emplace_back("ratio_" + std::to_string(n), fmt(coefficient(pieces.p1, n) / p1_formula(n), 10));
    }
    out.push_back(std::move(r));
  }

  {
    // p3 / mu^n: pole term only, corrections are O((sqrt 5/mu)^n)
    auto r = make_report("p3_pole_constant", Method::fit, coefficient(pieces.p3, n_max) / pow(m, n_max),
                         reference::kTheta, 40);
    r.n_range = std::make_pair(n_max, n_max);
    out.push_back(std::move(r));
  }

  {
    // (p2 + p3)/mu^n ~ c0 + c1 n^{-1/2} + ...; the pole terms cancel when c0 = 0.
    auto y = [&](int n) -> PrecFloat { return (coefficient(pieces.p2, n) + coefficient(pieces.p3, n)) / pow(m, n); };
    const FitResult fit = least_squares_fit(y, n_max / 2, n_max, {0, 0.5, 1.5, 2.5, 3.5, 4.5}, false);
    auto c0 = make_report("p2_plus_p3_pole_constant", Method::fit, fit.plain[0], "", 40);
    auto c1 = make_report("p2_plus_p3_sqrt_constant", Method::fit, fit.plain[1], reference::kB0Half, 40);
    for (auto* r : {&c0, &c1}) {
      r->n_range = std::make_pair(fit.n_lo, fit.n_hi);
      r->corrections = 4;
      r->diagnostics.emplace_back("basis", "n^{-e}, e = 0, 1/2, 3/2, .., 9/2");
    }
    c1.diagnostics.emplace_back("analytic_horizontal_constant", fmt(b0_horizontal_analytic()));
    out.push_back(std::move(c0));
    out.push_back(std::move(c1));
  }

  {
    // Per-summand formula against exact summand coefficients, and the summed 1/sqrt(n) constant.
    auto first_term = [&](int k) -> PrecFloat {
      const PrecFloat u = pow(t, 2 * k + 1);
      return -(1 - u) / (1 + u) * pow(m, -2 * k * k - 2 * k) / sqrt(PrecFloat(2));
    };
    auto second_term = [&](int k) -> PrecFloat {
      const PrecFloat u = pow(t, 2 * k + 1);
      return sqrt(2 / pi()) * ((2 * k + 1) * (1 - u * u) - u) / ((1 + u) * (1 + u)) *
             pow(m, PrecFloat(-2 * k * k - 2 * k) - PrecFloat(5) / 2);
    };
    for (int k = 0; k <= 2; ++k) {
      const exact::TSeries summand = closedform::p2_summand(k, n_max);
      const PrecFloat exact_value = coefficient(summand, n_max) / pow(m, n_max);
      const PrecFloat formula = first_term(k) + second_term(k) / sqrt(PrecFloat(n_max));
      auto r = make_report("p2_summand_" + std::to_string(k) + "_ratio", Method::fit, exact_value / formula, "1", 40);
      r.n_range = std::make_pair(n_max, n_max);
      r.diagnostics.emplace_back("exact_over_mu_n", fmt(exact_value));
      r.diagnostics.emplace_back("formula_over_mu_n", fmt(formula));
      r.diagnostics.emplace_back("sqrt_n_gap",
                                 fmt((exact_value - first_term(k)) * sqrt(PrecFloat(n_max)) - second_term(k), 8));
      out.push_back(std::move(r));
    }
    PrecFloat summed = 0;
    for (int k = 0;; ++k) {
      const PrecFloat term = second_term(k);
      summed += term;
      if (abs(term) < negligible()) break;
    }
    auto r = make_report("p2_summed_sqrt_constant", Method::analytic, summed, reference::kB0Half, 40);
    r.diagnostics.emplace_back("analytic_horizontal_constant", fmt(b0_horizontal_analytic()));
    out.push_back(std::move(r));
  }
  return out;
}

std::pair<AsymptoticReport, AsymptoticReport> free_walk_validation(int n_max) {
  ScopedDigits scope(60);
  const auto& c = cached_counts(enumerate::ModelKind::free, n_max);
  const PrecFloat m = mu();
  constexpr int kCorrections = 2;
  const FitResult prefactor = least_squares_fit([&](int n) -> PrecFloat { return to_prec(c[n]) / pow(m, n); }, n_max / 2, n_max,
                                                integer_exponents(kCorrections), true);
  const FitResult growth = least_squares_fit([&](int n) -> PrecFloat { return to_prec(c[n + 1]) / to_prec(c[n]); }, n_max / 2,
                                             n_max - 1, integer_exponents(kCorrections), true);
  auto a = make_report("free_prefactor", Method::fit, prefactor.plain[0], fmt(m / 2, 40), 60);
  auto b = make_report("free_growth", Method::fit, growth.plain[0], fmt(m, 40), 60);
  a.n_range = std::make_pair(prefactor.n_lo, prefactor.n_hi);
  b.n_range = std::make_pair(growth.n_lo, growth.n_hi);
  a.corrections = b.corrections = kCorrections;
  return {a, b};
}

std::vector<AsymptoticReport> precision_stability() {
  auto analytic = [](unsigned digits) {
    std::vector<AsymptoticReport> v;
    v.push_back(a0_report(digits));
    auto [a1, a2] = constants_A1A2(Method::analytic, digits);
    v.push_back(a1);
    v.push_back(a2);
    v.push_back(constant_theta(digits));
    v.push_back(constant_B0(Method::analytic, digits));
    v.push_back(constant_B0_horizontal(Method::analytic, digits));
    v.push_back(constant_halfplane(Method::analytic, digits));
    return v;
  };
  std::vector<AsymptoticReport> low = analytic(30);
  const std::vector<AsymptoticReport> high = analytic(60);
  for (std::size_t i = 0; i < low.size(); ++i) {
    ScopedDigits scope(70);
    const double agree = exact::agreeing_digits(low[i].value, high[i].value);
    low[i].diagnostics.emplace_back("digits_agreeing_30_vs_60", fmt(std::min(agree, 60.0)));
  }
  return low;
}

}  // namespace wedge::asymptotics
