#pragma once

// Verification suites over the enumeration, kernel and closed-form modules, and the
// ledger of discrepancies between printed formulas and the enumeration.

#include <string>
#include <vector>

namespace wedge::verify {

enum class Status { pass, fail, reported };

std::string to_string(Status status);

struct Check {
  std::string identity;
  std::string parameters;
  Status status = Status::pass;
  std::string detail;      ///< first failing coefficient or similar
  std::string ledger_key;  ///< set for reported discrepancies
};

struct Verdict {
  std::string suite;
  int order = 0;
  std::vector<Check> checks;

  /// No unexpected failures; reported discrepancies do not count.
  bool passed() const;
  int count(Status status) const;
};

enum class Suite { kernel, funceq, closedform, interpretations, growth };

std::string to_string(Suite suite);
Suite parse_suite(const std::string& name);
std::vector<Suite> all_suites();
int default_order(Suite suite);

inline constexpr int kMaxVerifyOrder = 200;

Verdict run_suite(Suite suite, int order);

struct LedgerEntry {
  std::string key;
  std::string title;
  std::string location;  ///< which printed formula or constant
  std::string observed;  ///< what the comparison shows
  std::string trusted;   ///< which side is taken as correct
};

/// Re-runs each probe; only discrepancies that are still observed are returned.
std::vector<LedgerEntry> ledger_entries();
std::vector<std::string> ledger_keys();
/// Detailed comparison for one entry. Throws std::invalid_argument for unknown keys.
std::string ledger_explain(const std::string& key);
/// One block per entry, or "no entries".
std::string format_ledger(const std::vector<LedgerEntry>& entries);

}  // namespace wedge::verify
