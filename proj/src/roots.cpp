#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "wedge/asymptotics.hpp"

namespace wedge::asymptotics {

namespace {

using Complex = std::complex<PrecFloat>;
using Matrix = Eigen::Matrix<PrecFloat, Eigen::Dynamic, Eigen::Dynamic>;

PrecFloat modulus(const Complex& z) { return boost::multiprecision::sqrt(z.real() * z.real() + z.imag() * z.imag()); }

Complex mul(const Complex& a, const Complex& b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

Complex div(const Complex& a, const Complex& b) {
  const PrecFloat d = b.real() * b.real() + b.imag() * b.imag();
  return {(a.real() * b.real() + a.imag() * b.imag()) / d, (a.imag() * b.real() - a.real() * b.imag()) / d};
}

// p(z) and p'(z) by Horner, coefficients constant term first.
void horner(const std::vector<PrecFloat>& c, const Complex& z, Complex& value, Complex& derivative) {
  value = Complex(PrecFloat(0), PrecFloat(0));
  derivative = value;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    derivative = mul(derivative, z) + value;
    value = mul(value, z) + Complex(*it, PrecFloat(0));
  }
}

std::vector<Complex> companion_roots(const std::vector<PrecFloat>& c) {
  const int d = static_cast<int>(c.size()) - 1;
  Matrix m = Matrix::Zero(d, d);
  for (int j = 0; j < d; ++j) m(0, j) = -c[d - 1 - j] / c[d];
  for (int i = 1; i < d; ++i) m(i, i - 1) = 1;
  Eigen::EigenSolver<Matrix> solver(m, false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("companion eigenvalue solve failed");
  std::vector<Complex> roots;
  for (int i = 0; i < d; ++i) roots.emplace_back(solver.eigenvalues()(i).real(), solver.eigenvalues()(i).imag());
  return roots;
}

// Zeros inside |t| = radius by accumulating the change of arg p along the circle.
int winding_count(const std::vector<BigInt>& coefficients, double radius) {
  constexpr int kSteps = 16384;
  std::vector<double> c;
  for (const auto& v : coefficients) c.push_back(v.get_d());
  auto eval = [&](double theta) {
    const std::complex<double> z = std::polar(radius, theta);
    std::complex<double> acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
  };
  double total = 0;
  std::complex<double> previous = eval(0);
  for (int s = 1; s <= kSteps; ++s) {
    const std::complex<double> current = eval(2 * std::numbers::pi * s / kSteps);
    total += std::arg(current / previous);
    previous = current;
  }
  return static_cast<int>(std::lround(total / (2 * std::numbers::pi)));
}

}  // namespace

std::string to_string(RootFamily family) { return family == RootFamily::q_type ? "Q" : "P"; }

std::vector<BigInt> audit_polynomial(RootFamily family, int k) {
  // exponent -> coefficient, before clearing negative powers
  std::vector<std::pair<int, int>> terms = {{0, 1}};
  if (family == RootFamily::q_type) {
    for (int j = 0; j < 4; ++j) terms.emplace_back(k + j, j == 0 ? 1 : -1);
    terms.emplace_back(2 * k + 4, 1);
  } else {
    terms.emplace_back(k - 1, 1);
    terms.emplace_back(k + 1, -3);
    terms.emplace_back(2 * k + 2, 1);
  }
  int low = 0;
  int high = 0;
  for (const auto& [e, c] : terms) {
    low = std::min(low, e);
    high = std::max(high, e);
  }
  std::vector<BigInt> out(high - low + 1, BigInt(0));
  for (const auto& [e, c] : terms) out[e - low] += c;
  while (!out.empty() && out.back() == 0) out.pop_back();
  std::size_t first = 0;
  while (first < out.size() && out[first] == 0) ++first;
  out.erase(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(first));
  return out;
}

bool RootAudit::ok() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const RootAuditRow& r) { return !r.undocumented_inside() && r.strategies_agree(); });
}

RootAudit root_audit(int k_max, unsigned digits) {
  if (k_max < -1 || k_max > 30) throw std::invalid_argument("root audit needs -1 <= k_max <= 30");
  exact::ScopedDigits scope(std::max(digits, 30u));
  const PrecFloat half("0.5");
  const PrecFloat other_branch = boost::multiprecision::sqrt(PrecFloat(2)) - 1;
  const PrecFloat tolerance = boost::multiprecision::pow(PrecFloat(10), -static_cast<int>(digits / 2));

  RootAudit audit;
  audit.k_max = k_max;
  for (RootFamily family : {RootFamily::q_type, RootFamily::p_type}) {
    for (int k = -1; k <= k_max; ++k) {
      RootAuditRow row;
      row.family = family;
      row.k = k;
      row.coefficients = audit_polynomial(family, k);
      std::vector<PrecFloat> c;
      for (const auto& v : row.coefficients) c.push_back(exact::to_prec(v));

      row.roots = companion_roots(c);
      for (auto& z : row.roots) {
        const Complex start = z;
        for (int iter = 0; iter < 60; ++iter) {
          Complex value, derivative;
          horner(c, z, value, derivative);
          if (modulus(derivative) == 0) break;
          const Complex step = div(value, derivative);
          z = z - step;
          if (modulus(step) <= modulus(z) * std::numeric_limits<PrecFloat>::epsilon()) break;
        }
        row.max_polish_shift = std::max(row.max_polish_shift, static_cast<double>(modulus(z - start)));
      }

      row.min_modulus = modulus(row.roots.front());
      for (const auto& z : row.roots) {
        const PrecFloat r = modulus(z);
        row.min_modulus = std::min(row.min_modulus, r);
        if (r < half) {
          ++row.inside_eigen;
          if (family == RootFamily::p_type && k == 0 && boost::multiprecision::abs(r - other_branch) < tolerance) {
            row.flagged = true;
            row.note = "root t = " + exact::to_decimal(z.real(), 12) +
                       " of modulus sqrt(2) - 1, on the other branch of P; the stated root is its negative";
          }
        }
      }
      row.inside_winding = winding_count(row.coefficients, 0.5);
      audit.rows.push_back(std::move(row));
    }
  }
  return audit;
}

}  // namespace wedge::asymptotics
