#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

#include "wedge/asymptotics.hpp"

namespace wedge::asymptotics {

using Matrix = Eigen::Matrix<PrecFloat, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<PrecFloat, Eigen::Dynamic, 1>;

FitResult least_squares_fit(const std::function<PrecFloat(int)>& y, int n_lo, int n_hi,
                            const std::vector<double>& exponents, bool with_parity, double shift) {
  const int terms = static_cast<int>(exponents.size());
  const int columns = with_parity ? 2 * terms : terms;
  const int rows = n_hi - n_lo + 1;
  if (terms == 0 || rows < columns) throw std::invalid_argument("fit window too small for the basis");

  Matrix design(rows, columns);
  Vector rhs(rows);
  for (int r = 0; r < rows; ++r) {
    const int n = n_lo + r;
    const PrecFloat x = PrecFloat(n) + PrecFloat(shift);
    const PrecFloat sign = (n % 2 == 0) ? PrecFloat(1) : PrecFloat(-1);
    for (int j = 0; j < terms; ++j) {
      const PrecFloat basis = boost::multiprecision::pow(x, PrecFloat(-exponents[j]));
      design(r, j) = basis;
      if (with_parity) design(r, terms + j) = sign * basis;
    }
    rhs(r) = y(n);
  }
  const Vector solution = design.colPivHouseholderQr().solve(rhs);

  FitResult out;
  out.n_lo = n_lo;
  out.n_hi = n_hi;
  for (int j = 0; j < terms; ++j) out.plain.push_back(solution(j));
  if (with_parity) {
    for (int j = 0; j < terms; ++j) out.parity.push_back(solution(terms + j));
  }
  return out;
}

}  // namespace wedge::asymptotics
