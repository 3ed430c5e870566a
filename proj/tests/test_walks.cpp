#include <gtest/gtest.h>

#include "wedge/walks.hpp"

using namespace wedge::enumerate;
using wedge::exact::BigInt;

namespace {

std::vector<long> first(const CountTable& t, int n) {
  std::vector<long> out;
  for (int k = 0; k <= n; ++k) out.push_back(t.counts[k].get_si());
  return out;
}

}  // namespace

TEST(CountWalks, SmallTables) {
  EXPECT_EQ(first(count_walks({ModelKind::symmetric, 1}, 5), 5), (std::vector<long>{1, 1, 3, 5, 13, 27}));
  EXPECT_EQ(first(count_walks({ModelKind::asymmetric, 1}, 4), 4), (std::vector<long>{1, 1, 2, 3, 7}));
  EXPECT_EQ(first(count_walks({ModelKind::free, 1}, 4), 4), (std::vector<long>{1, 3, 7, 17, 41}));
  EXPECT_EQ(first(count_walks({ModelKind::halfplane, 1}, 4), 4), (std::vector<long>{1, 2, 4, 9, 20}));
}

TEST(CountWalks, FreeWalksFollowPellRecurrence) {
  const auto t = count_walks({ModelKind::free, 1}, 200);
  for (int n = 2; n <= 200; ++n) EXPECT_EQ(t.counts[n], 2 * t.counts[n - 1] + t.counts[n - 2]);
}

TEST(CountWalks, BudgetExceededNamesLength) {
  CountOptions options;
  options.max_states = 50;
  try {
    count_walks({ModelKind::symmetric, 1}, 100, options);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_GT(e.length(), 0);
  }
}

TEST(CountWalks, CsvExport) {
  const std::string csv = to_csv(count_walks({ModelKind::symmetric, 1}, 2));
  EXPECT_EQ(csv, "length,count\n0,1\n1,1\n2,3\n");
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force_oracle({ModelKind::symmetric, 1}, 3), 5);
  EXPECT_EQ(brute_force_oracle({ModelKind::asymmetric, 1}, 2), 2);
  for (auto kind : {ModelKind::free, ModelKind::symmetric, ModelKind::asymmetric, ModelKind::halfplane}) {
    EXPECT_EQ(brute_force_oracle({kind, 1}, 0), 1);
  }
  EXPECT_THROW(brute_force_oracle({ModelKind::free, 1}, kBruteForceLimit + 1), std::invalid_argument);
}

TEST(BruteForce, AgreesWithDynamicProgramming) {
  const std::vector<ModelKind> kinds = {ModelKind::free,          ModelKind::symmetric,    ModelKind::asymmetric,
                                        ModelKind::quarter_endline, ModelKind::halfplane, ModelKind::boundary_flat,
                                        ModelKind::boundary_diag};
  for (auto kind : kinds) {
    for (int p = 1; p <= 2; ++p) {
      const WedgeModel model{kind, p};
      const auto table = count_walks(model, 12);
      for (int n = 0; n <= 12; ++n) {
        EXPECT_EQ(table.counts[n], brute_force_oracle(model, n)) << describe(model) << " n=" << n;
      }
    }
  }
}

TEST(WeightedSeries, Entries) {
  const auto sym = weighted_gf({ModelKind::symmetric, 1}, 6);
  EXPECT_EQ(sym.coeff(1, 1, 1), 1);
  BigInt total = 0;
  for (const auto& [key, c] : sym.entries()) {
    if (std::get<0>(key) == 3) total += c;
  }
  EXPECT_EQ(total, brute_force_horizontal({ModelKind::symmetric, 1}, 3));
  const auto asym = weighted_gf({ModelKind::asymmetric, 1}, 6);
  EXPECT_EQ(asym.coeff(0, 0, 0), 1);
}

TEST(WeightedSeries, ExponentsBounded) {
  for (int p = 1; p <= 2; ++p) {
    const auto w = weighted_gf({ModelKind::symmetric, p}, 10);
    for (const auto& [key, c] : w.entries()) {
      const auto [n, i, j] = key;
      EXPECT_GE(i, 0);
      EXPECT_GE(j, 0);
      EXPECT_LE(i, 2 * p * n);
      EXPECT_LE(j, 2 * p * n);
    }
  }
}

TEST(WeightedSeries, UnitWeightsCountHorizontalEndings) {
  for (auto kind : {ModelKind::symmetric, ModelKind::asymmetric}) {
    for (int p = 1; p <= 2; ++p) {
      const WedgeModel model{kind, p};
      const auto at_one = weighted_gf(model, 12).at(1, 1);
      for (int n = 0; n <= 12; ++n) {
        EXPECT_EQ(at_one.coeff(n), wedge::exact::Rational(brute_force_horizontal(model, n))) << describe(model) << n;
      }
    }
  }
}

TEST(Growth, SupermultiplicativityExample) {
  const auto t = count_walks({ModelKind::symmetric, 1}, 5);
  EXPECT_LE(t.counts[2] * t.counts[2], t.counts[5]);
  EXPECT_TRUE(check_supermultiplicativity(count_walks({ModelKind::symmetric, 1}, 61), 30).ok);
  EXPECT_TRUE(check_supermultiplicativity(count_walks({ModelKind::asymmetric, 2}, 61), 30).ok);
}

TEST(Growth, MonotoneSandwichContainment) {
  const int n = 100;
  for (int p = 1; p <= 3; ++p) {
    const auto sym = count_walks({ModelKind::symmetric, p}, n);
    const auto asym = count_walks({ModelKind::asymmetric, p}, n);
    EXPECT_TRUE(check_monotone(sym).ok);
    EXPECT_TRUE(check_monotone(asym).ok);
    EXPECT_TRUE(check_sandwich(asym, sym, count_walks({ModelKind::free, 1}, n)).ok);
    if (p < 3) {
      const auto wider = count_walks({ModelKind::symmetric, p + 1}, n);
      const auto wider_asym = count_walks({ModelKind::asymmetric, p + 1}, n);
      for (int k = 0; k <= n; ++k) {
        EXPECT_LE(sym.counts[k], wider.counts[k]);
        EXPECT_LE(asym.counts[k], wider_asym.counts[k]);
      }
    }
  }
}

TEST(Growth, QuarterPlaneEmbedding) {
  const auto b = count_walks({ModelKind::quarter_endline, 1}, 2);
  const auto w = count_walks({ModelKind::asymmetric, 1}, 5);
  EXPECT_LE(b.counts[2], w.counts[5]);
  for (int p = 1; p <= 2; ++p) EXPECT_TRUE(check_quarter_embedding(p, 6, 3).ok);
}

TEST(Growth, Estimates) {
  wedge::exact::ScopedDigits scope(30);
  const auto free = growth_estimate(count_walks({ModelKind::free, 1}, 10));
  EXPECT_EQ(free.ratios[4], wedge::exact::PrecFloat(99) / 41);
  EXPECT_LT(boost::multiprecision::abs(free.ratios[4] - wedge::exact::growth_constant()), 1e-3);
  const auto sym = growth_estimate(count_walks({ModelKind::symmetric, 1}, 400));
  EXPECT_LT(boost::multiprecision::abs(sym.roots[400] / wedge::exact::growth_constant() - 1), 0.01);
}

TEST(Models, ParseRoundTrip) {
  for (auto kind : {ModelKind::free, ModelKind::symmetric, ModelKind::asymmetric, ModelKind::quarter_endline,
                    ModelKind::halfplane, ModelKind::boundary_flat, ModelKind::boundary_diag}) {
    EXPECT_EQ(parse_model_kind(to_string(kind)), kind);
  }
  EXPECT_THROW(parse_model_kind("wedge"), std::invalid_argument);
}
