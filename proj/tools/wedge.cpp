// Command-line front end: enumeration, series, verification suites, asymptotic constants.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "wedge/asymptotics.hpp"
#include "wedge/closedform.hpp"
#include "wedge/serialize.hpp"
#include "wedge/verify.hpp"
#include "wedge/walks.hpp"

namespace {

using nlohmann::json;
using namespace wedge;

constexpr int kSchema = 1;
constexpr int kMaxLength = 1000;
constexpr int kMaxP = 10;
constexpr unsigned kMaxDigits = 200;

enum Exit { kOk = 0, kFailed = 1, kInvalid = 2, kBudget = 3 };

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json series_json(const std::string& kind, const exact::TSeries& s) {
  json j = serialize::to_json(s);
  j["schema"] = kSchema;
  j["kind"] = kind;
  return j;
}

json verdict_json(const verify::Verdict& v) {
  json checks = json::array();
  for (const auto& c : v.checks) {
    json item = {{"identity", c.identity}, {"parameters", c.parameters}, {"status", verify::to_string(c.status)}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    if (!c.ledger_key.empty()) item["ledger"] = c.ledger_key;
    checks.push_back(item);
  }
  return {{"suite", v.suite},
          {"order", v.order},
          {"passed", v.passed()},
          {"pass", v.count(verify::Status::pass)},
          {"fail", v.count(verify::Status::fail)},
          {"reported", v.count(verify::Status::reported)},
          {"checks", checks}};
}

std::string verdict_text(const verify::Verdict& v) {
  std::ostringstream out;
  for (const auto& c : v.checks) {
    out << verify::to_string(c.status) << "  [" << v.suite << "] " << c.identity << " (" << c.parameters << ")";
    if (!c.detail.empty()) out << ": " << c.detail;
    if (!c.ledger_key.empty()) out << " [ledger " << c.ledger_key << "]";
    out << "\n";
  }
  out << v.suite << ": " << v.count(verify::Status::pass) << " pass, " << v.count(verify::Status::fail) << " fail, "
      << v.count(verify::Status::reported) << " reported\n";
  return out.str();
}

json report_json(const asymptotics::AsymptoticReport& r) {
  exact::ScopedDigits scope(r.digits + 10);
  const unsigned shown = r.method == asymptotics::Method::analytic ? r.digits + 2 : std::min(r.digits, 20u);
  json j = {{"name", r.name},
            {"method", asymptotics::to_string(r.method)},
            {"value", exact::to_decimal(r.value, shown)},
            {"digits", r.digits},
            {"corrections", r.corrections}};
  if (r.has_reference()) {
    j["reference"] = r.reference_text;
    j["abs_error"] = exact::to_decimal(r.abs_error(), 6);
    j["agreeing_digits"] = std::round(r.agreeing_digits() * 100) / 100;
  } else {
    j["reference"] = nullptr;
  }
  j["n_range"] = r.n_range ? json{r.n_range->first, r.n_range->second} : json(nullptr);
  json diag = json::array();
  for (const auto& [k, v] : r.diagnostics) diag.push_back({k, v});
  j["diagnostics"] = diag;
  return j;
}

json root_audit_json(const asymptotics::RootAudit& audit) {
  json rows = json::array();
  for (const auto& r : audit.rows) {
    json roots = json::array();
    for (const auto& z : r.roots) roots.push_back({exact::to_decimal(z.real(), 20), exact::to_decimal(z.imag(), 20)});
    json coeffs = json::array();
    for (const auto& c : r.coefficients) coeffs.push_back(c.get_str());
    rows.push_back({{"family", asymptotics::to_string(r.family)},
                    {"k", r.k},
                    {"coefficients", coeffs},
                    {"min_modulus", exact::to_decimal(r.min_modulus, 20)},
                    {"inside_companion", r.inside_eigen},
                    {"inside_winding", r.inside_winding},
                    {"flagged", r.flagged},
                    {"note", r.note},
                    {"roots", roots}});
  }
  return {{"k_min", audit.k_min}, {"k_max", audit.k_max}, {"ok", audit.ok()}, {"rows", rows}};
}

json eq37_json() {
  json rows = json::array();
  for (const auto& r : asymptotics::eq37_accuracy()) {
    exact::ScopedDigits scope(30);
    rows.push_back({{"n", r.n},
                    {"exact", r.exact.get_str()},
                    {"estimate", exact::to_decimal(r.estimate, 15)},
                    {"relative_error", r.relative_error},
                    {"bound", r.bound},
                    {"within", r.within()}});
  }
  return rows;
}

struct AsymptOptions {
  std::string name = "all";
  unsigned digits = exact::default_digits_from_env();
  int n_max = 0;  // 0: per-constant default
  std::string method = "analytic";
};

json asympt_json(const AsymptOptions& o) {
  using namespace asymptotics;
  if (o.digits < 15) throw std::invalid_argument("--digits must be at least 15");
  if (o.digits > kMaxDigits) throw BudgetError("--digits is limited to " + std::to_string(kMaxDigits));
  if (o.n_max > kMaxLength) throw BudgetError("--nmax is limited to " + std::to_string(kMaxLength));
  if (o.n_max != 0 && o.n_max < 40) throw std::invalid_argument("--nmax must be at least 40");
  const Method method = parse_method(o.method);
  auto n_or = [&](int fallback) { return o.n_max == 0 ? fallback : o.n_max; };
  json reports = json::array();
  const std::string& c = o.name;
  const bool all = c == "all";
  bool known = false;
  if (all || c == "A0") {
    if (o.digits > 50) throw BudgetError("A0 is computed to at most 50 digits");
    reports.push_back(report_json(constant_A0(o.digits)));
    known = true;
  }
  if (all || c == "A1" || c == "A2" || c == "A1A2") {
    auto [a1, a2] = constants_A1A2(method, o.digits, n_or(200));
    if (c != "A2") reports.push_back(report_json(a1));
    if (c != "A1") reports.push_back(report_json(a2));
    known = true;
  }
  if (all || c == "theta") {
    reports.push_back(report_json(constant_theta(o.digits)));
    known = true;
  }
  if (all || c == "B0") {
    reports.push_back(report_json(constant_B0(method, o.digits, n_or(400))));
    known = true;
  }
  if (all || c == "B0h") {
    reports.push_back(report_json(constant_B0_horizontal(method, o.digits, n_or(400))));
    known = true;
  }
  if (all || c == "halfplane") {
    reports.push_back(report_json(constant_halfplane(method, o.digits, n_or(400))));
    known = true;
  }
  if (all || c == "pieces") {
    for (const auto& r : p_pieces_asymptotics(n_or(400))) reports.push_back(report_json(r));
    known = true;
  }
  if (all || c == "free") {
    auto [a, b] = free_walk_validation(n_or(200));
    reports.push_back(report_json(a));
    reports.push_back(report_json(b));
    known = true;
  }
  if (all || c == "stability") {
    for (const auto& r : precision_stability()) reports.push_back(report_json(r));
    known = true;
  }
  json out = {{"schema", kSchema}, {"reports", reports}};
  if (all || c == "eq37") {
    out["eq37_accuracy"] = eq37_json();
    known = true;
  }
  if (all || c == "roots") {
    out["root_audit"] = root_audit_json(root_audit(20));
    known = true;
  }
  if (all || c == "consistency") {
    const auto check = b0_consistency();
    exact::ScopedDigits scope(30);
    out["b0_consistency"] = {{"product", exact::to_decimal(check.product, 20)},
                             {"target", exact::to_decimal(check.target, 20)},
                             {"agreeing_digits", std::round(check.agreeing_digits * 100) / 100},
                             {"printed_digits", check.printed_digits},
                             {"holds", check.holds()}};
    known = true;
  }
  if (!known) throw std::invalid_argument("unknown constant '" + c + "'");
  return out;
}

json ledger_json(const std::vector<verify::LedgerEntry>& entries) {
  json out = json::array();
  for (const auto& e : entries) {
    out.push_back({{"key", e.key}, {"title", e.title}, {"where", e.location}, {"observed", e.observed},
                   {"trusted", e.trusted}});
  }
  return out;
}

struct VerifyPlan {
  std::vector<std::pair<verify::Suite, int>> runs;
};

VerifyPlan plan_from_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read manifest '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("manifest '" + path + "': " + e.what());
  }
  if (j.value("schema", 0) != kSchema) throw std::invalid_argument("manifest schema must be 1");
  VerifyPlan plan;
  for (const auto& item : j.at("suites")) {
    const auto suite = verify::parse_suite(item.at("suite").get<std::string>());
    plan.runs.emplace_back(suite, item.value("order", verify::default_order(suite)));
  }
  return plan;
}

int run_verify(const VerifyPlan& plan, const std::string& format, const std::string& output) {
  json verdicts = json::array();
  std::string text;
  bool passed = true;
  for (const auto& [suite, order] : plan.runs) {
    const auto v = verify::run_suite(suite, order);
    passed = passed && v.passed();
    verdicts.push_back(verdict_json(v));
    text += verdict_text(v);
  }
  if (format == "json") {
    emit(dump({{"schema", kSchema}, {"passed", passed}, {"verdicts", verdicts}}), output);
  } else {
    emit(text, output);
  }
  return passed ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration and generating functions of partially directed walks in wedges"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("-o,--output", output, "Write the result to this file instead of stdout");

  auto* count = app.add_subcommand("count", "Exact walk counts as CSV or JSON");
  std::string model_name = "symmetric";
  int p = 1;
  int n = 40;
  std::string count_format = "csv";
  count->add_option("--model", model_name, "free, symmetric, asymmetric, quarter_endline, halfplane, boundary_flat, "
                                           "boundary_diag");
  count->add_option("--p", p, "Wedge slope")->check(CLI::Range(1, kMaxP));
  count->add_option("--n", n, "Largest length")->check(CLI::NonNegativeNumber);
  count->add_option("--format", count_format)->check(CLI::IsMember({"csv", "json"}));

  auto* series = app.add_subcommand("series", "Coefficients of a closed-form generating function");
  std::string kind_name = "sym_g1";
  int order = 50;
  std::string series_format = "json";
  series->add_option("--kind", kind_name, "free, dyck, bargraph:P, sym_f1, sym_g1, asym_h1, asym_k1, halfplane, "
                                          "theta_sym:A, theta_asym:Q|P, F_aya:A, H_aya_raw:A, H_aya_simplified:A");
  series->add_option("--order,-N", order, "Truncation order")->check(CLI::NonNegativeNumber);
  series->add_option("--format", series_format)->check(CLI::IsMember({"csv", "json"}));

  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites; exit 1 on unexpected failures");
  std::string suite_name;
  std::string manifest;
  int verify_order = 0;
  std::string verify_format = "json";
  verify_cmd->add_option("--suite", suite_name, "kernel, funceq, closedform, interpretations or growth");
  verify_cmd->add_option("--manifest", manifest, "JSON manifest listing suites and orders");
  verify_cmd->add_option("--order", verify_order, "Truncation order (suite default when omitted)");
  verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"json", "text"}));

  auto* asympt = app.add_subcommand("asympt", "Asymptotic constants as JSON reports");
  AsymptOptions asympt_options;
  asympt->add_option("--const", asympt_options.name,
                     "A0, A1, A2, A1A2, theta, B0, B0h, halfplane, pieces, free, stability, eq37, roots, "
                     "consistency or all");
  asympt->add_option("--digits", asympt_options.digits, "Working precision in decimal digits");
  asympt->add_option("--nmax", asympt_options.n_max, "Largest length used by fits");
  asympt->add_option("--method", asympt_options.method)->check(CLI::IsMember({"analytic", "fit"}));

  auto* report = app.add_subcommand("report", "All suites, constants and ledger entries in one JSON document");

  auto* ledger = app.add_subcommand("ledger", "Discrepancies between printed formulas and the enumeration");
  ledger->require_subcommand(1);
  auto* ledger_list = ledger->add_subcommand("list", "Entries that are currently observed");
  std::string ledger_format = "text";
  ledger_list->add_option("--format", ledger_format)->check(CLI::IsMember({"json", "text"}));
  auto* ledger_explain = ledger->add_subcommand("explain", "Details for one entry");
  std::string ledger_key;
  ledger_explain->add_option("key", ledger_key)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*count) {
      if (n > kMaxLength) throw BudgetError("--n is limited to " + std::to_string(kMaxLength));
      const enumerate::WedgeModel model{enumerate::parse_model_kind(model_name), p};
      const auto table = enumerate::count_walks(model, n);
      if (count_format == "csv") {
        emit(enumerate::to_csv(table), output);
      } else {
        json j = serialize::to_json(table);
        j["schema"] = kSchema;
        emit(dump(j), output);
      }
      return kOk;
    }
    if (*series) {
      if (order > closedform::kMaxSeriesOrder) {
        throw BudgetError("--order is limited to " + std::to_string(closedform::kMaxSeriesOrder));
      }
      const auto kind = closedform::parse_gf_kind(kind_name);
      const auto s = closedform::gf_series(kind, order);
      if (series_format == "json") {
        emit(dump(series_json(closedform::to_string(kind), s)), output);
      } else {
        std::ostringstream out;
        out << "power,coefficient\n";
        for (int k = s.is_zero() ? 0 : std::min(s.valuation(), 0); k <= order; ++k) {
          out << k << "," << exact::to_string(s.coeff(k)) << "\n";
        }
        emit(out.str(), output);
      }
      return kOk;
    }
    if (*verify_cmd) {
      if (verify_order > verify::kMaxVerifyOrder) {
        throw BudgetError("--order is limited to " + std::to_string(verify::kMaxVerifyOrder));
      }
      VerifyPlan plan;
      if (!manifest.empty()) {
        plan = plan_from_manifest(manifest);
      } else if (!suite_name.empty()) {
        const auto suite = verify::parse_suite(suite_name);
        plan.runs.emplace_back(suite, verify_order == 0 ? verify::default_order(suite) : verify_order);
      } else {
        for (auto suite : verify::all_suites()) plan.runs.emplace_back(suite, verify::default_order(suite));
      }
      if (verify_order != 0) {
        for (auto& run : plan.runs) run.second = verify_order;
      }
      return run_verify(plan, verify_format, output);
    }
    if (*asympt) {
      emit(dump(asympt_json(asympt_options)), output);
      return kOk;
    }
    if (*report) {
      json verdicts = json::array();
      bool passed = true;
      for (auto suite : verify::all_suites()) {
        const auto v = verify::run_suite(suite, verify::default_order(suite));
        passed = passed && v.passed();
        verdicts.push_back(verdict_json(v));
      }
      AsymptOptions all;
      all.digits = std::min(all.digits, 50u);
      json doc = {{"schema", kSchema},
                  {"passed", passed},
                  {"verdicts", verdicts},
                  {"asymptotics", asympt_json(all)},
                  {"ledger", ledger_json(verify::ledger_entries())}};
      emit(dump(doc), output);
      return passed ? kOk : kFailed;
    }
    if (*ledger_list) {
      const auto entries = verify::ledger_entries();
      emit(ledger_format == "json" ? dump({{"schema", kSchema}, {"entries", ledger_json(entries)}})
                                   : verify::format_ledger(entries),
           output);
      return kOk;
    }
    if (*ledger_explain) {
      emit(verify::ledger_explain(ledger_key), output);
      return kOk;
    }
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const enumerate::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kOk;
}
