#include <gtest/gtest.h>

#include <algorithm>

#include "wedge/verify.hpp"

using namespace wedge::verify;

class SuiteTest : public ::testing::TestWithParam<Suite> {};

TEST_P(SuiteTest, PassesAtDefaultOrder) {
  const Verdict verdict = run_suite(GetParam(), default_order(GetParam()));
  for (const auto& check : verdict.checks) {
    EXPECT_NE(check.status, Status::fail) << check.identity << " [" << check.parameters << "] " << check.detail;
    if (check.status == Status::reported) {
      EXPECT_FALSE(check.ledger_key.empty()) << check.identity;
    }
  }
  EXPECT_TRUE(verdict.passed());
  EXPECT_GT(verdict.count(Status::pass) + verdict.count(Status::reported), 0);
}

INSTANTIATE_TEST_SUITE_P(AllSuites, SuiteTest, ::testing::ValuesIn(all_suites()),
                         [](const auto& info) { return to_string(info.param); });

TEST(Suites, OrderBounds) {
  EXPECT_THROW(run_suite(Suite::kernel, 7), std::invalid_argument);
  EXPECT_THROW(run_suite(Suite::kernel, kMaxVerifyOrder + 1), std::invalid_argument);
  EXPECT_THROW(parse_suite("everything"), std::invalid_argument);
  for (Suite s : all_suites()) EXPECT_EQ(parse_suite(to_string(s)), s);
}

TEST(Ledger, ListsHalfplaneEntry) {
  const auto entries = ledger_entries();
  const auto it = std::find_if(entries.begin(), entries.end(), [](const LedgerEntry& e) { return e.key == "halfplane"; });
  ASSERT_NE(it, entries.end());
  EXPECT_EQ(it->title, "halfplane formula: valuation -2 as printed");
  EXPECT_NE(format_ledger(entries).find("halfplane formula: valuation -2 as printed"), std::string::npos);
}

TEST(Ledger, ExplainShowsCounts) {
  const std::string text = ledger_explain("halfplane");
  EXPECT_NE(text.find("1, 2, 4, 9, 20, 45"), std::string::npos) << text;
  EXPECT_THROW(ledger_explain("no_such_entry"), std::invalid_argument);
}

TEST(Ledger, EmptyLedger) { EXPECT_EQ(format_ledger({}), "no entries\n"); }

TEST(Ledger, KeysMatchEntries) {
  const auto keys = ledger_keys();
  for (const auto& entry : ledger_entries()) {
    EXPECT_NE(std::find(keys.begin(), keys.end(), entry.key), keys.end()) << entry.key;
  }
}
