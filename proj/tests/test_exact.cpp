#include <gtest/gtest.h>

#include <random>

#include "wedge/precfloat.hpp"
#include "wedge/rational.hpp"
#include "wedge/serialize.hpp"
#include "wedge/series.hpp"

using namespace wedge::exact;

namespace {

TSeries poly(std::vector<Rational> c, int valuation = 0) { return TSeries::polynomial(std::move(c), valuation); }

TSeries random_series(std::mt19937& rng, int order, int valuation_min = 0, int valuation_max = 2) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> val(valuation_min, valuation_max);
  const int v = val(rng);
  std::vector<Rational> c;
  for (int k = v; k <= order; ++k) c.emplace_back(coeff(rng), den(rng));
  c[0] = Rational(coeff(rng) >= 0 ? 1 : -2, 3);  // nonzero leading coefficient
  for (auto& x : c) x.canonicalize();
  return TSeries(v, c, order);
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
  EXPECT_EQ(to_string(parse_rational("-10/4")), "-5/2");
  EXPECT_EQ(to_string(parse_rational("7")), "7");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(Rational, SquareRoot) {
  Rational root;
  EXPECT_TRUE(rational_square_root(Rational(9, 4), root));
  EXPECT_EQ(root, Rational(3, 2));
  EXPECT_FALSE(rational_square_root(Rational(2), root));
}

TEST(Series, ProductDifferenceOfSquares) {
  EXPECT_EQ(poly({1, 1}) * poly({1, -1}), poly({1, 0, -1}));
}

TEST(Series, DivisionGivesFreeWalkCounts) {
  const TSeries q = poly({1, 1}).truncated(4) / poly({1, -2, -1}).truncated(4);
  EXPECT_EQ(q.order(), 4);
  const std::vector<int> expected = {1, 3, 7, 17, 41};
  for (int k = 0; k <= 4; ++k) EXPECT_EQ(q.coeff(k), expected[k]);
}

TEST(Series, ValuationAwareDivision) {
  const TSeries num = poly({2, 0, 2}, 2).truncated(6);
  const TSeries den = poly({1, 0, 1}, 1).truncated(6);
  const TSeries q = num / den;
  EXPECT_EQ(q.valuation(), 1);
  ASSERT_GE(q.order(), 4);
  // 2t^2 (1 + t^2) / (t (1 + t^2)) = 2t exactly
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(q.coeff(k), k == 1 ? 2 : 0) << "t^" << k;
  EXPECT_FALSE(first_difference(q * den, num, q.order() + 1));
}

TEST(Series, DivisionByZeroThrows) {
  EXPECT_THROW(poly({1}).truncated(3) / TSeries::zero(3), SeriesError);
}

TEST(Series, SquareRoots) {
  EXPECT_EQ(sqrt(poly({1}).truncated(5)).truncated(5), poly({1}).truncated(5));
  const TSeries s = sqrt(poly({1, 0, -6, 0, 5}).truncated(7));
  const std::vector<int> expected = {1, 0, -3, 0, -2, 0, -6};
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(s.coeff(k), expected[k]) << "t^" << k;

  const TSeries r = sqrt((poly({1, 0, 0, 0, -1}) * poly({1, -2, -1})).truncated(6));
  const std::vector<int> expected_r = {1, -1, -1, -1, -2, -2, -4};
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(r.coeff(k), expected_r[k]) << "t^" << k;
}

TEST(Series, SquareRootErrors) {
  EXPECT_THROW(sqrt(poly({1}, 1).truncated(5)), SeriesError);
  EXPECT_THROW(sqrt(poly({2}).truncated(5)), SeriesError);
}

TEST(Series, Evaluate) {
  EXPECT_EQ(evaluate(poly({1, 1, 1}), Rational(0)), 1);
  EXPECT_EQ(evaluate(poly({1, 2}), Rational(1, 2)), 2);
  EXPECT_THROW(evaluate(poly({1}, -1), Rational(0)), SeriesError);
}

TEST(Series, Compose) {
  EXPECT_EQ(compose(poly({0, 0, 1}), poly({0, 2})), poly({0, 0, 4}));
  const TSeries geometric = inverse(poly({1, -1}).truncated(4));
  const TSeries c = compose(geometric, poly({0, 0, 1}));
  ASSERT_GE(c.order(), 4);
  const std::vector<int> expected = {1, 0, 1, 0, 1};
  for (int k = 0; k <= 4; ++k) EXPECT_EQ(c.coeff(k), expected[k]);
}

TEST(Series, PrintingShowsOrder) {
  const std::string text = to_string(poly({1, 3, 7}).truncated(4));
  EXPECT_NE(text.find("O(t^5)"), std::string::npos) << text;
}

TEST(Series, CoefficientBeyondOrderThrows) {
  EXPECT_THROW(poly({1, 1}).truncated(3).coeff(4), SeriesError);
}

TEST(SeriesProperty, AddSubtractRoundTrip) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const TSeries a = random_series(rng, 20, -2, 3);
    const TSeries b = random_series(rng, 20, -2, 3);
    EXPECT_FALSE(first_difference((a + b) - b, a, 20));
  }
}

TEST(SeriesProperty, MultiplyDivideRoundTrip) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const TSeries a = random_series(rng, 20, -1, 2);
    const TSeries b = random_series(rng, 20, 0, 2);
    const TSeries back = (a * b) / b;
    EXPECT_FALSE(first_difference(back, a, back.order())) << to_string(a) << " / " << to_string(b);
    EXPECT_GE(back.order(), std::min(20, 20 + a.valuation() - b.valuation()));
  }
}

TEST(SeriesProperty, SquareRootSquares) {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> c = {1};
    for (int k = 1; k <= 6; ++k) c.emplace_back(coeff(rng));
    const TSeries radicand = poly(c).truncated(30);
    const TSeries s = sqrt(radicand);
    EXPECT_FALSE(first_difference(s * s, radicand, 30));
  }
}

TEST(SeriesProperty, CoefficientsStayCanonical) {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    const TSeries a = random_series(rng, 15);
    const TSeries b = random_series(rng, 15, 0, 0);
    const TSeries q = a / b;
    for (const auto& c : q.coeffs()) {
      Rational rebuilt(c.get_num(), c.get_den());
      rebuilt.canonicalize();
      EXPECT_EQ(rebuilt, c);
      EXPECT_GT(c.get_den(), 0);
    }
  }
}

TEST(PrecFloat, OperationsWithinTwoUlps) {
  std::mt19937 rng(15);
  std::uniform_int_distribution<int> num(1, 100000);
  for (int trial = 0; trial < 50; ++trial) {
    const Rational x(num(rng), num(rng));
    const Rational y(num(rng), num(rng));
    auto run = [&](unsigned digits) {
      ScopedDigits scope(digits);
      const PrecFloat a = to_prec(x);
      const PrecFloat b = to_prec(y);
      return std::vector<PrecFloat>{a + b, a - b, a * b, a / b, boost::multiprecision::sqrt(a)};
    };
    PrecFloat epsilon30;
    {
      ScopedDigits narrow(30);
      epsilon30 = std::numeric_limits<PrecFloat>::epsilon();
    }
    ScopedDigits wide(60);
    const PrecFloat ax = abs(to_prec(x));
    const PrecFloat ay = abs(to_prec(y));
    // sums and differences are measured against the operand size
    const std::vector<PrecFloat> scale = {ax + ay, ax + ay, PrecFloat(0), PrecFloat(0), PrecFloat(0)};
    const auto low = run(30);
    const auto high = run(60);
    for (std::size_t i = 0; i < low.size(); ++i) {
      const PrecFloat size = std::max(PrecFloat(abs(high[i])), scale[i]);
      const PrecFloat ulp = size * epsilon30;
      EXPECT_LE(boost::multiprecision::abs(PrecFloat(low[i]) - high[i]), 2 * ulp) << "operation " << i;
    }
  }
}

TEST(PrecFloat, GrowthConstantAndDecimal) {
  ScopedDigits scope(30);
  EXPECT_EQ(to_decimal(growth_constant(), 10), "2.414213562");
  EXPECT_GT(agreeing_digits(growth_constant(), PrecFloat("2.41421356237309504880")), 19);
}

TEST(SeriesProperty, JsonRoundTrip) {
  std::mt19937 rng(16);
  for (int trial = 0; trial < 50; ++trial) {
    const TSeries a = random_series(rng, 12, -3, 3);
    EXPECT_EQ(wedge::serialize::series_from_json(wedge::serialize::to_json(a)), a);
  }
  const TSeries exact = poly({1, -2, Rational(1, 3)});
  EXPECT_EQ(wedge::serialize::series_from_json(wedge::serialize::to_json(exact)), exact);
  EXPECT_THROW(wedge::serialize::series_from_json(nlohmann::json::object()), std::invalid_argument);
}
