#pragma once

// Exact enumeration of partially directed walks (steps N, S, E; N never adjacent
// to S) in the wedge geometries and their boundary-restricted variants.

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "wedge/rational.hpp"
#include "wedge/series.hpp"

namespace wedge::enumerate {

using exact::BigInt;
using exact::Rational;
using exact::TSeries;

enum class ModelKind {
  free,             ///< no constraint
  symmetric,        ///< -pX <= Y <= pX
  asymmetric,       ///< 0 <= Y <= pX
  quarter_endline,  ///< X >= 0, Y >= 0, final vertex on Y = 0
  halfplane,        ///< Y >= 0
  boundary_flat,    ///< Y >= 0, ends on Y = 0 with a horizontal step
  boundary_diag,    ///< Y >= X, ends on Y = X with a horizontal step
};

struct WedgeModel {
  ModelKind kind = ModelKind::free;
  int p = 1;

  /// Whether the vertex (x, y) lies in the admissible region.
  bool admits(long x, long y) const;
  /// Whether a walk ending at (x, y) with the given last step is counted.
  bool accepts_end(long x, long y, bool empty_or_horizontal) const;

  friend bool operator==(const WedgeModel&, const WedgeModel&) = default;
};

ModelKind parse_model_kind(const std::string& name);
std::string to_string(ModelKind kind);
std::string describe(const WedgeModel& model);

/// Last step of a walk; `none` only for the empty walk.
enum class Step : std::uint8_t { none, horizontal, up, down };

struct WalkState {
  long x = 0;
  long y = 0;
  Step last = Step::none;
};

/// counts[n] = number of walks with n edges.
struct CountTable {
  WedgeModel model;
  std::vector<BigInt> counts;

  int max_length() const { return static_cast<int>(counts.size()) - 1; }
  /// Generating function sum counts[n] t^n truncated at max_length.
  TSeries series() const;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(int length, std::size_t states);
  int length() const { return length_; }

 private:
  int length_;
};

struct CountOptions {
  /// Largest number of live DP states per length before BudgetExceeded is thrown.
  std::size_t max_states = std::size_t{1} << 26;
};

/// Exact counts for lengths 0..n_max by a per-length frontier over (X, Y, last step).
CountTable count_walks(const WedgeModel& model, int n_max, const CountOptions& options = {});

/// Exhaustive depth-first generation with an explicit visited set. Independent of
/// count_walks; exponential cost, so n is limited to kBruteForceLimit.
inline constexpr int kBruteForceLimit = 14;
BigInt brute_force_oracle(const WedgeModel& model, int n);

/// Same as brute_force_oracle but only walks that are empty or end in a horizontal step.
BigInt brute_force_horizontal(const WedgeModel& model, int n);

/// Sparse trivariate series: coefficient of t^n a^i b^j.
///
/// Symmetric model: i = pX - Y, j = pX + Y. Asymmetric model: i = pX - Y, j = Y.
/// Only walks that are empty or end in a horizontal step contribute.
class WeightedSeries {
 public:
  using Key = std::tuple<int, int, int>;

  WeightedSeries(WedgeModel model, int order) : model_(model), order_(order) {}

  const WedgeModel& model() const { return model_; }
  int order() const { return order_; }
  const std::map<Key, BigInt>& entries() const { return entries_; }

  void add(int n, int i, int j, const BigInt& count);
  BigInt coeff(int n, int i, int j) const;

  /// sum c a^i b^j t^n at rational a, b.
  TSeries at(const Rational& a, const Rational& b) const;
  /// f(a, t a) = sum c a^{i+j} t^{n+j}.
  TSeries diagonal_lower(const Rational& a) const;
  /// f(t b, b) = sum c b^{i+j} t^{n+i}.
  TSeries diagonal_upper(const Rational& b) const;

 private:
  WedgeModel model_;
  int order_;
  std::map<Key, BigInt> entries_;
};

/// Endpoint-distance-weighted series of horizontal-ending walks, lengths 0..order.
WeightedSeries weighted_gf(const WedgeModel& model, int order);

/// First violated growth inequality, if any.
struct GrowthReport {
  bool ok = true;
  std::string first_violation;
  std::size_t checks = 0;
};

/// Super-multiplicativity v_n v_m <= v_{n+m+1} for n, m <= m_max over the model, and
/// b_n^N <= w_{ceil(np) + nN + N, p} for the asymmetric wedge with n <= n_max, N <= power_max.
GrowthReport check_supermultiplicativity(const CountTable& table, int m_max);
GrowthReport check_quarter_embedding(int p, int n_max, int power_max);
/// w <= v <= c for all lengths in the three tables.
GrowthReport check_sandwich(const CountTable& asymmetric, const CountTable& symmetric, const CountTable& free);
/// counts[n+1] >= counts[n].
GrowthReport check_monotone(const CountTable& table);

/// Ratios counts[n+1]/counts[n] and n-th roots counts[n]^{1/n} at the current precision.
struct GrowthEstimate {
  std::vector<exact::PrecFloat> ratios;  ///< index n: counts[n+1]/counts[n]
  std::vector<exact::PrecFloat> roots;   ///< index n: counts[n]^{1/n}, roots[0] = 1
};
GrowthEstimate growth_estimate(const CountTable& table);

/// CSV with a `length,count` header.
std::string to_csv(const CountTable& table);

}  // namespace wedge::enumerate
