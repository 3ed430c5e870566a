#include <gtest/gtest.h>

#include <random>

#include "wedge/kernel.hpp"

using namespace wedge::kernel;
using wedge::exact::first_difference;

namespace {

const KernelSystem kSym1{Model::symmetric, 1};
const KernelSystem kAsym1{Model::asymmetric, 1};

TSeries t() { return TSeries::variable(); }
TSeries c(const Rational& r) { return TSeries::constant(r); }

void expect_holds(const std::vector<IdentityCheck>& checks) {
  for (const auto& check : checks) {
    EXPECT_TRUE(check.holds()) << check.identity << " [" << check.parameters << "] first bad coefficient "
                               << check.first_bad_coefficient.value_or(-1);
  }
}

Rational random_argument(std::mt19937& rng) {
  static const std::vector<Rational> pool = {Rational(1), Rational(1, 2), Rational(1, 3), Rational(2, 3),
                                             Rational(3, 5), Rational(2), Rational(5, 4), Rational(3, 7)};
  return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
}

}  // namespace

TEST(KernelEval, SymmetricUnitSlopeMatchesExpandedForm) {
  for (const auto& [a, b] : std::vector<std::pair<Rational, Rational>>{{1, 1}, {Rational(1, 2), 3}, {2, Rational(3, 5)}}) {
    const TSeries K = kernel_eval(kSym1, a, b).K;
    const TSeries T = t();
    const TSeries expected = (T * T * T * c(a * a) - T * c(a * a) - T) * c(b * b) + (c(1) + T * T) * c(a * b) -
                             T * c(a * a);
    EXPECT_EQ(K, expected) << a << "," << b;
  }
}

TEST(KernelEval, SymmetricSystemIsSymmetric) {
  for (int p = 1; p <= 3; ++p) {
    const KernelSystem sys{Model::symmetric, p};
    for (const auto& [a, b] : std::vector<std::pair<Rational, Rational>>{{1, 2}, {Rational(1, 3), Rational(5, 4)}}) {
      const auto ab = kernel_eval(sys, a, b);
      const auto ba = kernel_eval(sys, b, a);
      EXPECT_EQ(ab.K, ba.K);
      EXPECT_EQ(ab.X, ba.X);
      EXPECT_EQ(ab.Y, ba.Z);
    }
  }
}

TEST(KernelEval, AsymmetricSystemIsNotSymmetric) {
  const auto ab = kernel_eval(kAsym1, Rational(1), Rational(2));
  const auto ba = kernel_eval(kAsym1, Rational(2), Rational(1));
  const Rational third(1, 3);
  EXPECT_NE(evaluate(ab.Y, third), evaluate(ba.Z, third));
}

TEST(Roots, LeadingTerms) {
  const auto minus = root(kSym1, Branch::beta_minus, 1, 20).expansion;
  EXPECT_EQ(minus.valuation(), 1);
  EXPECT_EQ(minus.leading(), 1);
  const auto plus = root(kSym1, Branch::beta_plus, 1, 20).expansion;
  EXPECT_EQ(plus.valuation(), -1);
  EXPECT_EQ(plus.leading(), Rational(1, 2));
  const auto alpha = root(kAsym1, Branch::alpha_minus, 1, 40).expansion;
  EXPECT_EQ(alpha.valuation(), 1);
  EXPECT_EQ(alpha.leading(), 1);
  const TSeries K = kernel_eval(kAsym1, alpha, c(1)).K;
  EXPECT_FALSE(first_difference(K, TSeries::zero(40), 40));
}

TEST(Roots, KernelVanishesOnRandomArguments) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const Rational a = random_argument(rng);
    for (const auto& sys : {kSym1, kAsym1}) {
      for (Branch branch : {Branch::beta_minus, Branch::beta_plus}) {
        const TSeries beta = root(sys, branch, a, 40).expansion;
        const TSeries K = kernel_eval(sys, c(a), beta).K;
        EXPECT_FALSE(first_difference(K, TSeries::zero(40), std::min(40, K.order())))
            << to_string(sys.model) << " " << to_string(branch) << " a=" << a;
        EXPECT_GE(K.order(), 38);
      }
      for (Branch branch : {Branch::alpha_minus, Branch::alpha_plus}) {
        const TSeries alpha = root(sys, branch, a, 40).expansion;
        const TSeries K = kernel_eval(sys, alpha, c(a)).K;
        EXPECT_FALSE(first_difference(K, TSeries::zero(40), std::min(40, K.order())))
            << to_string(sys.model) << " " << to_string(branch) << " a=" << a;
      }
    }
  }
}

TEST(BetaIterate, Identity) {
  const auto r = beta_iterate(0, Rational(2, 3), 20);
  EXPECT_FALSE(first_difference(r.closed_form, c(Rational(2, 3)), 20));
  EXPECT_FALSE(first_difference(r.composed_form, c(Rational(2, 3)), 20));
}

TEST(BetaIterate, FirstIterateIsTheRoot) {
  const auto r = beta_iterate(1, 1, 25);
  const auto beta1 = root(kSym1, Branch::beta_minus, 1, 25).expansion;
  EXPECT_FALSE(first_difference(r.closed_form, beta1, 25));
}

TEST(BetaIterate, ThirdIterate) {
  const auto r = beta_iterate(3, 1, 30);
  EXPECT_EQ(r.closed_form.valuation(), 3);
  EXPECT_EQ(r.closed_form.leading(), 1);
  EXPECT_FALSE(first_difference(r.closed_form, r.composed_form, 30));
}

TEST(BetaIterate, ClosedFormMatchesCompositionForRandomArguments) {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 5; ++trial) {
    const Rational a = random_argument(rng);
    for (int n = -2; n <= kMaxCompositionDepth; ++n) {
      const auto r = beta_iterate(n, a, 25);
      EXPECT_FALSE(first_difference(r.closed_form, r.composed_form, 25)) << "n=" << n << " a=" << a;
    }
  }
}

TEST(GroupLaw, HoldsForSmallIndices) {
  for (int n = 0; n <= 5; ++n) expect_holds(group_law_check(n, 1, 25));
  expect_holds(group_law_check(2, Rational(1, 2), 30));
  expect_holds(group_law_check(-3, Rational(2, 3), 20));
}

TEST(GammaIterate, ClosedFormsMatchComposition) {
  const auto g0 = gamma_iterate(0, 1, 20);
  EXPECT_FALSE(first_difference(g0.gamma_closed, c(1), 20));
  const auto g2 = gamma_iterate(2, 1, 30);
  EXPECT_EQ(g2.gamma_composed.valuation(), 4);
  EXPECT_FALSE(first_difference(g2.gamma_closed, g2.gamma_composed, 30));
  for (int n = 0; n <= 4; ++n) {
    const auto g = gamma_iterate(n, Rational(1, 2), 20);
    EXPECT_FALSE(first_difference(g.gamma_closed, g.gamma_composed, 20)) << n;
    EXPECT_FALSE(first_difference(g.beta_gamma_closed, g.beta_gamma_composed, 20)) << n;
  }
}

TEST(GammaIterate, AlphaUndoesBetaInverse) {
  for (const Rational& a : {Rational(1), Rational(1, 2)}) {
    const TSeries inner = root(kAsym1, Branch::beta_plus, a, 25).expansion;
    const TSeries back = root_of(kAsym1, Branch::alpha_minus, inner, 25);
    EXPECT_FALSE(first_difference(back, c(a), 25)) << a;
  }
}

TEST(QSeries, Examples) {
  const TSeries q_sym = qpq_series(QKind::q_sym, 1, 6);
  EXPECT_FALSE(first_difference(q_sym, TSeries(3, {1, 0, 3}, 6), 6));
  const TSeries q_asym = qpq_series(QKind::q_asym, 1, 6);
  EXPECT_FALSE(first_difference(q_asym, TSeries(4, {1, 1, 2}, 6), 6));
}

TEST(QSeries, ProductOfConjugates) {
  for (const Rational& a : {Rational(1), Rational(1, 2), Rational(2, 3), Rational(3, 5), Rational(2)}) {
    const TSeries product = qpq_series(QKind::qbar_asym, a, 42) * qpq_series(QKind::q_asym, a, 42);
    EXPECT_FALSE(first_difference(product, TSeries::monomial(1, 3), 39)) << a;
  }
}

TEST(Residuals, FunctionalEquationExamples) {
  EXPECT_TRUE(residual_functional_eq(kSym1, 1, 1, 30).is_zero());
  EXPECT_TRUE(residual_functional_eq({Model::symmetric, 2}, Rational(2, 3), Rational(1, 2), 25).is_zero());
  EXPECT_TRUE(residual_functional_eq(kAsym1, Rational(1, 2), Rational(1, 3), 30).is_zero());
}

TEST(Residuals, KernelFormVanishesForAllSlopes) {
  const std::vector<std::pair<Rational, Rational>> points = {{Rational(1, 2), Rational(1, 3)},
                                                             {2, Rational(3, 5)},
                                                             {Rational(-1, 3), Rational(5, 4)}};
  for (auto model : {Model::symmetric, Model::asymmetric}) {
    for (int p = 1; p <= 3; ++p) {
      const KernelSystem sys{model, p};
      const auto weighted = wedge::enumerate::weighted_gf(
          {model == Model::symmetric ? wedge::enumerate::ModelKind::symmetric : wedge::enumerate::ModelKind::asymmetric, p},
          30);
      for (const auto& [a, b] : points) {
        EXPECT_TRUE(residual_functional_eq(sys, weighted, a, b, 30).is_zero()) << to_string(model) << p;
        EXPECT_TRUE(residual_kernel_form(sys, weighted, a, b, 30).is_zero()) << to_string(model) << p;
      }
    }
  }
}

TEST(ScriptCoefficients, RawMatchesSimplified) {
  expect_holds(script_coeffs(0, 1, 20).checks);
  expect_holds(script_coeffs(1, 1, 20).checks);
  expect_holds(script_coeffs(0, Rational(1, 2), 25).checks);
}

TEST(ScriptCoefficients, UsefulExpressionAtZero) {
  const TSeries beta = root(kAsym1, Branch::beta_minus, 1, 25).expansion;
  const TSeries lhs = c(1) - t() / beta;
  const TSeries rhs = qpq_series(QKind::q_asym, 1, 25) + t();
  EXPECT_FALSE(first_difference(lhs, rhs, 24));
}
