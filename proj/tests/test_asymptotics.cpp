#include <gtest/gtest.h>

#include "wedge/asymptotics.hpp"
#include "wedge/walks.hpp"

using namespace wedge::asymptotics;
using wedge::exact::growth_constant;
using wedge::exact::ScopedDigits;

namespace {

PrecFloat absval(const PrecFloat& x) { return boost::multiprecision::abs(x); }

}  // namespace

TEST(Constants, A0Analytic) {
  const auto report = constant_A0(30);
  EXPECT_GE(report.agreeing_digits(), 15);
  ScopedDigits scope(30);
  EXPECT_LT(report.value, (1 + boost::multiprecision::sqrt(PrecFloat(2))) / 2);
  EXPECT_THROW(constant_A0(51), std::invalid_argument);
}

TEST(Constants, A0LimitApproach) {
  ScopedDigits scope(40);
  const PrecFloat near = scaled_g1_near_pole(PrecFloat("1e-8"));
  EXPECT_GT(wedge::exact::agreeing_digits(near, decimal(reference::kA0)), 6.5);
}

TEST(Constants, A1A2Analytic) {
  const auto [a1, a2] = constants_A1A2(Method::analytic, 30);
  EXPECT_GE(a1.agreeing_digits(), 10);
  EXPECT_GE(a2.agreeing_digits(), 10);
}

TEST(Constants, A1A2Fit) {
  const auto [a1, a2] = constants_A1A2(Method::fit, 30, 200);
  EXPECT_GE(a1.agreeing_digits(), 3);
  EXPECT_GE(a2.agreeing_digits(), 3);
  ASSERT_TRUE(a1.n_range);
  EXPECT_EQ(a1.n_range->second, 200);
  EXPECT_GT(a1.corrections, 0);
}

TEST(Constants, ThetaSum) {
  const auto report = constant_theta(30);
  EXPECT_GE(report.agreeing_digits(), 15);
  ScopedDigits scope(30);
  EXPECT_LT(absval(theta_partial_sum(0) - PrecFloat("0.2928932188134524")), 1e-15);
  EXPECT_LT(absval(report.value - theta_partial_sum(2)), 1e-8);
}

TEST(Constants, HalfplaneClosedValue) {
  const auto report = constant_halfplane(Method::analytic, 30);
  EXPECT_GE(report.agreeing_digits(), 6);
  ScopedDigits scope(30);
  EXPECT_LT(absval(halfplane_ratio(4) - PrecFloat("1.1775")), 1e-3);
  EXPECT_LT(halfplane_ratio(4), report.value);
  EXPECT_LT(decimal(reference::kB0), report.value);
}

TEST(Constants, HalfplaneRatioAtFourHundred) {
  ScopedDigits scope(30);
  const PrecFloat limit = constant_halfplane(Method::analytic, 30).value;
  EXPECT_LT(absval(halfplane_ratio(400) / limit - 1), 0.02);
}

TEST(Constants, B0Analytic) {
  EXPECT_GE(constant_B0(Method::analytic, 30).agreeing_digits(), 15);
  const auto horizontal = constant_B0_horizontal(Method::analytic, 30);
  ScopedDigits scope(30);
  EXPECT_LT(absval(horizontal.value * growth_constant() - constant_B0(Method::analytic, 30).value), 1e-25);
}

TEST(Constants, B0RatioGapShrinks) {
  ScopedDigits scope(30);
  const PrecFloat b0 = decimal(reference::kB0);
  const PrecFloat g100 = absval(b0_ratio(100) - b0);
  const PrecFloat g200 = absval(b0_ratio(200) - b0);
  const PrecFloat g400 = absval(b0_ratio(400) - b0);
  EXPECT_LT(g200, g100);
  EXPECT_LT(g400, g200);
  EXPECT_LT(g400 / b0, 0.02);
}

TEST(Constants, PrintedConstantsConsistency) {
  const auto check = b0_consistency();
  EXPECT_EQ(check.printed_digits, 18);
  // the printed horizontal constant and the printed all-walks constant share only about five digits
  EXPECT_GT(check.agreeing_digits, 4);
  EXPECT_FALSE(check.holds());
}

TEST(Accuracy, ThreeConstantFormula) {
  const auto rows = eq37_accuracy();
  ASSERT_EQ(rows.size(), 4u);
  const std::vector<int> lengths = {10, 20, 30, 40};
  const std::vector<double> truncated = {0.07, 0.01, 0.002, 0.0006};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].n, lengths[i]);
    // the stated percentages are the observed errors cut to one significant digit
    EXPECT_GE(rows[i].relative_error, truncated[i]);
    EXPECT_LT(rows[i].relative_error, truncated[i] * 1.2);
  }
}

TEST(Fit, RecoversFreeWalkConstants) {
  const auto [prefactor, growth] = free_walk_validation(200);
  EXPECT_GE(prefactor.agreeing_digits(), 6);
  EXPECT_GE(growth.agreeing_digits(), 6);
}

TEST(Fit, ExactPolynomialData) {
  ScopedDigits scope(40);
  const auto fit = least_squares_fit(
      [](int n) -> PrecFloat { return PrecFloat(3) + PrecFloat(2) / n + (n % 2 ? -1 : 1) * PrecFloat(5) / n; }, 20, 60,
      {0, 1}, true);
  EXPECT_LT(absval(fit.plain[0] - 3), 1e-30);
  EXPECT_LT(absval(fit.plain[1] - 2), 1e-30);
  EXPECT_LT(absval(fit.parity[0]), 1e-30);
  EXPECT_LT(absval(fit.parity[1] - 5), 1e-30);
}

TEST(Stability, PrecisionDoubling) {
  for (const auto& report : precision_stability()) {
    bool found = false;
    for (const auto& [key, value] : report.diagnostics) {
      if (key == "digits_agreeing_30_vs_60") {
        found = true;
        EXPECT_GE(std::stod(value), 28) << report.name;
      }
    }
    EXPECT_TRUE(found) << report.name;
  }
}

TEST(RootAudit, OnlyTheDocumentedRootIsInside) {
  const auto audit = root_audit(20);
  EXPECT_TRUE(audit.ok());
  int flagged = 0;
  for (const auto& row : audit.rows) {
    EXPECT_TRUE(row.strategies_agree()) << to_string(row.family) << row.k;
    EXPECT_FALSE(row.undocumented_inside()) << to_string(row.family) << row.k;
    EXPECT_LT(row.max_polish_shift, 1e-20);
    if (row.flagged) {
      ++flagged;
      EXPECT_EQ(row.family, RootFamily::p_type);
      EXPECT_EQ(row.k, 0);
    }
    if (row.family == RootFamily::q_type && (row.k == 2 || row.k == -1)) {
      EXPECT_GT(row.min_modulus, 0.5);
    }
  }
  EXPECT_EQ(flagged, 1);
}

TEST(RootAudit, Polynomials) {
  using wedge::exact::BigInt;
  EXPECT_EQ(audit_polynomial(RootFamily::q_type, 0), (std::vector<BigInt>{2, -1, -1, -1, 1}));
  EXPECT_EQ(audit_polynomial(RootFamily::p_type, 0), (std::vector<BigInt>{1, 1, -3, 1}));
  EXPECT_THROW(root_audit(31), std::invalid_argument);
}

TEST(Pieces, ReportsEveryPiece) {
  const auto reports = p_pieces_asymptotics(200);
  EXPECT_GE(reports.size(), 5u);
  bool has_p1 = false;
  for (const auto& r : reports) has_p1 = has_p1 || r.name == "p1_ratio";
  EXPECT_TRUE(has_p1);
}
