#pragma once

// Explicit generating functions for wedge and comparison walks, assembled as exact
// truncated series, and comparators against the enumeration.

#include <optional>
#include <string>
#include <vector>

#include "wedge/series.hpp"
#include "wedge/walks.hpp"

namespace wedge::closedform {

using exact::Rational;
using exact::TSeries;

enum class GFTag {
  free,              ///< (1+t)/(1-2t-t^2)
  dyck,              ///< g = 1 + t g^2
  bargraph,          ///< g_p from h = t^{p+1}(1+h)^p (1 + h/(1 - t^2(1+h)))
  sym_f1,            ///< symmetric wedge, walks ending horizontally
  sym_g1,            ///< symmetric wedge, all walks
  asym_h1,           ///< asymmetric wedge, walks ending horizontally
  asym_k1,           ///< asymmetric wedge, all walks
  halfplane,         ///< formula for walks above y = 0, as printed
  theta_sym,         ///< sum (-1)^n t^{n^2} Q_sym(a)^n
  theta_asym,        ///< sum (1 - t^{2n-1}R)/(1 + t^{2n-1}R) (R/t)^{2n} t^{2n^2}, R = Q or P at 1
  F_aya,             ///< f(a, ta), symmetric wedge
  H_aya_raw,         ///< h(a, ta) from the unsimplified iteration sum
  H_aya_simplified,  ///< h(a, ta) from the simplified sum
};

enum class ThetaArgument { q, p };

struct GFKind {
  GFTag tag = GFTag::free;
  int p = 1;                                     ///< bargraph only
  Rational arg = 1;                              ///< theta_sym, F_aya, H_aya_*
  ThetaArgument theta_arg = ThetaArgument::q;    ///< theta_asym only
};

/// Parses "free", "bargraph:2", "F_aya:1/2", "theta_asym:P" and so on.
GFKind parse_gf_kind(const std::string& text);
std::string to_string(const GFKind& kind);
/// Every tag name accepted by parse_gf_kind.
std::vector<std::string> gf_tag_names();

inline constexpr int kMaxSeriesOrder = 1000;

TSeries gf_series(const GFKind& kind, int order);

struct Bargraph {
  TSeries h;
  TSeries g;
  TSeries residual;  ///< h - RHS(h)
  int iterations = 0;
};
Bargraph gf_bargraph(int p, int order);

/// sum_n (-1)^n t^{n^2} q^n; q must have positive valuation.
TSeries theta_sum_sym(const TSeries& q, int order);
/// sum_n (1 - t^{2n-1} q)/(1 + t^{2n-1} q) (q/t)^{2n} t^{2n^2}; q must have positive valuation.
TSeries theta_sum_asym(const TSeries& q, int order);

/// The three pieces of h_1(1,1): the algebraic part, the Q sum and the P sum.
struct HPieces {
  TSeries p1;
  TSeries p2;
  TSeries p3;
};
HPieces asym_h1_pieces(int order);
/// The k-th summand of the Q sum piece, prefactor included.
TSeries p2_summand(int k, int order);

/// Q(1) = (1 - 3t^2 - sqrt((1-t^2)(1-5t^2)))/(2t), as printed for the symmetric wedge.
TSeries printed_q_sym(int order);
/// Q(1) = (1 - t - t^2 - t^3 - sqrt((1-t^4)(1-2t-t^2)))/2, as printed for the asymmetric wedge.
TSeries printed_q_asym(int order);
/// (t/(2b))(1 - 2t^2 b - t^2 + sign * sqrt((1-t^2)(1-4t^2 b-t^2))), sign = +1 as printed.
TSeries printed_p_display(const Rational& b, int sign, int order);

struct CoefficientDiff {
  int n = 0;
  Rational closed;
  Rational reference;
};

struct ComparisonReport {
  std::string name;       ///< what the closed form is
  std::string reference;  ///< what it is compared against
  int order = 0;          ///< coefficients t^lo .. t^order compared
  std::optional<int> first_mismatch;
  std::vector<CoefficientDiff> diffs;  ///< every mismatching coefficient
  std::string note;

  bool agrees() const { return !first_mismatch.has_value(); }
};

/// Compares coefficients of t^k for min(valuations) <= k <= order.
ComparisonReport compare_series(std::string name, std::string reference, const TSeries& closed,
                                const TSeries& expected, int order);

/// gf_series(kind) against a count table: the coefficient of t^n against counts[n].
ComparisonReport compare_with_counts(const GFKind& kind, const enumerate::CountTable& table, int order);

/// f(a,ta) and h(a,ta) closed forms against the enumeration, and the raw sums against the
/// simplified one.
std::vector<ComparisonReport> solution_identities(const Rational& a, int order);

/// Q and P at a = b = 1 against t^3 (B - 1) for the boundary walk counts. Reports only.
std::vector<ComparisonReport> interpretation_comparators(int order);

/// The printed half-plane formula against the half-plane counts. Reports only.
ComparisonReport halfplane_comparator(int order);

}  // namespace wedge::closedform
