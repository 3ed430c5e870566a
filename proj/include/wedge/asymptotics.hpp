#pragma once

// Asymptotic constants for the wedge counts: analytic values from the local behaviour of
// the generating functions at their dominant singularities, least-squares fits of exact
// counts, and a location audit for the zeros that could spoil the analysis.

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wedge/precfloat.hpp"
#include "wedge/rational.hpp"

namespace wedge::asymptotics {

using exact::BigInt;
using exact::PrecFloat;

enum class Method { analytic, fit };

std::string to_string(Method method);
Method parse_method(const std::string& text);

/// Printed reference values, kept as decimal strings.
namespace reference {
inline constexpr const char* kA0 = "0.27730985348603118827";
inline constexpr const char* kA1 = "3.71410486533662324953";
inline constexpr const char* kA2 = "0.20697997020804157910";
inline constexpr const char* kTheta = "0.31096381899209832";
inline constexpr const char* kB0 = "0.218693916694303177";
inline constexpr const char* kB0Half = "0.090584741026764287";
inline constexpr const char* kHalfplane = "1.496489";
}  // namespace reference

PrecFloat decimal(const char* text);

struct AsymptoticReport {
  std::string name;
  Method method = Method::analytic;
  PrecFloat value;
  std::string reference_text;  ///< empty when there is no printed value
  unsigned digits = 0;         ///< working precision
  std::optional<std::pair<int, int>> n_range;
  int corrections = 0;  ///< number of 1/n^j correction terms in a fit
  std::vector<std::pair<std::string, std::string>> diagnostics;

  bool has_reference() const { return !reference_text.empty(); }
  PrecFloat abs_error() const;
  /// Significant digits shared with the reference; 0 without a reference.
  double agreeing_digits() const;
};

/// Least-squares fit y_n ~ sum_j (b_j + (-1)^n c_j) / (n + shift)^{e_j} over n_lo..n_hi.
struct FitResult {
  std::vector<PrecFloat> plain;   ///< b_j for each exponent
  std::vector<PrecFloat> parity;  ///< c_j (empty without parity terms)
  int n_lo = 0;
  int n_hi = 0;
};
FitResult least_squares_fit(const std::function<PrecFloat(int)>& y, int n_lo, int n_hi,
                            const std::vector<double>& exponents, bool with_parity, double shift = 0);

/// lim (1 - t/t_c) g_1(1,1) at t_c = sqrt(2) - 1.
AsymptoticReport constant_A0(unsigned digits);
/// (1 - t/t_c) g_1(1,1) at t = t_c (1 - epsilon), for the limit diagnostic.
PrecFloat scaled_g1_near_pole(const PrecFloat& epsilon);

/// Coefficients of 5^{n/2}/(n+1)^{3/2} and (-1)^n 5^{n/2}/(n+1)^{3/2} in v_n - A_0 mu^n.
std::pair<AsymptoticReport, AsymptoticReport> constants_A1A2(Method method, unsigned digits, int n_max = 200);

struct AccuracyRow {
  int n = 0;
  BigInt exact;
  PrecFloat estimate;
  double relative_error = 0;
  double bound = 0;

  bool within() const { return relative_error <= bound; }
};
/// The three-constant formula with the printed constants against v_10, v_20, v_30, v_40.
std::vector<AccuracyRow> eq37_accuracy();

/// (1/sqrt 2) sum_k (1 - t_c^{2k+1})/(1 + t_c^{2k+1}) t_c^{2k^2+2k}.
AsymptoticReport constant_theta(unsigned digits);
PrecFloat theta_partial_sum(int k_max);

/// Coefficient of mu^n / sqrt(n) in the all-walks count of the asymmetric wedge.
AsymptoticReport constant_B0(Method method, unsigned digits, int n_max = 400);
/// Same for walks ending with a horizontal step (mu^{-1} times the above).
AsymptoticReport constant_B0_horizontal(Method method, unsigned digits, int n_max = 400);
/// w_n sqrt(n) / mu^n.
PrecFloat b0_ratio(int n);

/// Printed horizontal-walk constant times 1 + sqrt 2 against the printed all-walks constant.
struct ConsistencyCheck {
  PrecFloat product;
  PrecFloat target;
  double agreeing_digits = 0;
  int printed_digits = 0;

  bool holds() const { return agreeing_digits >= printed_digits; }
};
ConsistencyCheck b0_consistency();

/// Half-plane constant sqrt((7 + 5 sqrt 2)/(2 pi)), or a fit of the half-plane counts.
AsymptoticReport constant_halfplane(Method method, unsigned digits, int n_max = 400);
PrecFloat halfplane_ratio(int n);

/// Diagnostics for the three pieces of h_1(1,1); reports only.
std::vector<AsymptoticReport> p_pieces_asymptotics(int n_max);

/// Fit of the free-walk counts: prefactor (1 + sqrt 2)/2 and growth 1 + sqrt 2.
std::pair<AsymptoticReport, AsymptoticReport> free_walk_validation(int n_max = 200);

/// Analytic constants at 30 and 60 digits; diagnostics list the agreeing digits.
std::vector<AsymptoticReport> precision_stability();

enum class RootFamily { q_type, p_type };
std::string to_string(RootFamily family);

struct RootAuditRow {
  RootFamily family = RootFamily::q_type;
  int k = 0;
  std::vector<BigInt> coefficients;  ///< constant term first
  std::vector<std::complex<PrecFloat>> roots;
  PrecFloat min_modulus;
  int inside_eigen = 0;     ///< roots with |t| < 1/2 from the companion matrix
  int inside_winding = 0;   ///< zeros inside |t| = 1/2 by the argument principle
  double max_polish_shift = 0;  ///< largest Newton correction to an eigenvalue
  bool flagged = false;     ///< the documented root of modulus sqrt(2) - 1 at k = 0
  std::string note;

  bool undocumented_inside() const { return inside_eigen > (flagged ? 1 : 0); }
  bool strategies_agree() const { return inside_eigen == inside_winding; }
};

struct RootAudit {
  int k_min = -1;
  int k_max = 0;
  std::vector<RootAuditRow> rows;

  bool ok() const;
};

/// Zeros of 1 + (1-t-t^2-t^3) t^k + t^{2k+4} and 1 + (1-3t^2) t^{k-1} + t^{2k+2} for k = -1..k_max.
RootAudit root_audit(int k_max, unsigned digits = 30);
/// Integer coefficients after clearing negative powers of t.
std::vector<BigInt> audit_polynomial(RootFamily family, int k);

}  // namespace wedge::asymptotics
