// Acceptance criteria 1-11, one PASS/FAIL line each.
//
// Exit status is 0 when the set of failing criteria equals the --expect-fail list
// (default: empty), so a criterion that starts failing or starts passing both show up.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wedge/asymptotics.hpp"
#include "wedge/closedform.hpp"
#include "wedge/kernel.hpp"
#include "wedge/verify.hpp"
#include "wedge/walks.hpp"

namespace {

using namespace wedge;
using asymptotics::Method;
using asymptotics::PrecFloat;
using enumerate::ModelKind;
using exact::Rational;
using exact::TSeries;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(4);
  out << x;
  return out.str();
}

bool vanishes(const TSeries& s, int upto) { return !exact::first_difference(s, TSeries::zero(upto), upto); }

Outcome closed_form_symmetric() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto report =
      closedform::compare_with_counts({closedform::GFTag::sym_g1}, enumerate::count_walks({ModelKind::symmetric, 1}, 100), 100);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(report.agrees(), "mismatch at t^" + std::to_string(report.first_mismatch.value_or(-1)));
  o.require(seconds < 10, "runtime " + fmt(seconds) + " s");
  o.detail = o.pass ? "n <= 100 exact, " + fmt(seconds) + " s" : o.detail;
  return o;
}

Outcome closed_form_asymmetric() {
  Outcome o;
  const auto report = closedform::compare_with_counts({closedform::GFTag::asym_k1},
                                                      enumerate::count_walks({ModelKind::asymmetric, 1}, 100), 100);
  o.require(report.agrees(), "mismatch at t^" + std::to_string(report.first_mismatch.value_or(-1)));
  if (o.pass) o.detail = "n <= 100 exact";
  return o;
}

Outcome functional_equations() {
  Outcome o;
  const std::vector<std::pair<Rational, Rational>> points = {
      {Rational(1, 2), Rational(1, 3)}, {2, Rational(3, 5)}, {Rational(-1, 3), Rational(5, 4)}};
  int checked = 0;
  for (auto model : {kernel::Model::symmetric, kernel::Model::asymmetric}) {
    for (int p = 1; p <= 3; ++p) {
      const auto kind = model == kernel::Model::symmetric ? ModelKind::symmetric : ModelKind::asymmetric;
      const auto weighted = enumerate::weighted_gf({kind, p}, 30);
      for (const auto& [a, b] : points) {
        const TSeries r = kernel::residual_functional_eq({model, p}, weighted, a, b, 30);
        o.require(r.order() >= 30 && vanishes(r, 30),
                  kernel::to_string(model) + " p=" + std::to_string(p) + " a=" + exact::to_string(a));
        ++checked;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " residuals vanish mod t^31";
  return o;
}

Outcome kernel_identities() {
  Outcome o;
  const kernel::KernelSystem sym{kernel::Model::symmetric, 1};
  const kernel::KernelSystem asym{kernel::Model::asymmetric, 1};
  for (const Rational& a : {Rational(1), Rational(1, 2), Rational(3)}) {
    for (const auto& sys : {sym, asym}) {
      const TSeries beta = kernel::root(sys, kernel::Branch::beta_minus, a, 40).expansion;
      o.require(vanishes(kernel::kernel_eval(sys, TSeries::constant(a), beta).K, 40),
                "K(a, beta_1(a)) at a=" + exact::to_string(a));
    }
    for (int n = -2; n <= kernel::kMaxCompositionDepth; ++n) {
      const auto r = kernel::beta_iterate(n, a, 30);
      o.require(!exact::first_difference(r.closed_form, r.composed_form, 30), "beta_" + std::to_string(n));
    }
    for (int n = 0; n <= 4; ++n) {
      const auto g = kernel::gamma_iterate(n, a, 30);
      o.require(!exact::first_difference(g.gamma_closed, g.gamma_composed, 30) &&
                    !exact::first_difference(g.beta_gamma_closed, g.beta_gamma_composed, 30),
                "gamma_" + std::to_string(n));
    }
    for (const auto& check : kernel::group_law_check(1, a, 30)) o.require(check.holds(), check.identity);
  }
  for (const Rational& a : {Rational(1), Rational(1, 2), Rational(2, 3), Rational(3, 5), Rational(2)}) {
    const TSeries product = kernel::qpq_series(kernel::QKind::qbar_asym, a, 42) * kernel::qpq_series(kernel::QKind::q_asym, a, 42);
    o.require(!exact::first_difference(product, TSeries::monomial(1, 3), 39), "Qbar Q at a=" + exact::to_string(a));
  }
  if (o.pass) o.detail = "roots mod t^41, beta_n n<=6, gamma_n n<=4, group law, Qbar Q = t^3 mod t^40";
  return o;
}

Outcome accuracy_table() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto rows = asymptotics::eq37_accuracy();
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::string observed;
  for (const auto& row : rows) {
    observed += (observed.empty() ? "" : ", ") + std::string("n=") + std::to_string(row.n) + " " +
                fmt(100 * row.relative_error) + "% (bound " + fmt(100 * row.bound) + "%)";
    o.require(row.within(), "n=" + std::to_string(row.n) + " outside bound");
  }
  o.require(seconds < 1, "runtime " + fmt(seconds) + " s");
  o.detail = observed + (o.pass ? "" : " | " + o.detail);
  return o;
}

Outcome constants_A() {
  Outcome o;
  const auto a0 = asymptotics::constant_A0(30);
  const auto [a1, a2] = asymptotics::constants_A1A2(Method::fit, 30, 200);
  o.require(a0.agreeing_digits() >= 15, "A0 digits " + fmt(a0.agreeing_digits()));
  o.require(a1.agreeing_digits() >= 3, "A1 fit digits " + fmt(a1.agreeing_digits()));
  o.require(a2.agreeing_digits() >= 3, "A2 fit digits " + fmt(a2.agreeing_digits()));
  o.detail = "A0 " + fmt(a0.agreeing_digits()) + " digits, A1 fit " + fmt(a1.agreeing_digits()) + ", A2 fit " +
             fmt(a2.agreeing_digits()) + (o.pass ? "" : " | " + o.detail);
  return o;
}

Outcome theta_and_consistency() {
  Outcome o;
  const auto theta = asymptotics::constant_theta(30);
  const auto consistency = asymptotics::b0_consistency();
  o.require(theta.agreeing_digits() >= 12, "theta digits " + fmt(theta.agreeing_digits()));
  o.require(consistency.holds(), "printed 0.090584741026764287 x (1 + sqrt 2) agrees with 0.218693916694303177 to " +
                                     fmt(consistency.agreeing_digits) + " of " +
                                     std::to_string(consistency.printed_digits) + " digits");
  o.detail = "theta " + fmt(theta.agreeing_digits()) + " digits" + (o.pass ? "" : " | " + o.detail);
  return o;
}

Outcome b0_ratio_check() {
  Outcome o;
  exact::ScopedDigits scope(30);
  const auto start = std::chrono::steady_clock::now();
  const PrecFloat b0 = asymptotics::decimal(asymptotics::reference::kB0);
  std::vector<PrecFloat> gaps;
  for (int n : {100, 200, 400}) gaps.push_back(PrecFloat(boost::multiprecision::abs(asymptotics::b0_ratio(n) - b0) / b0));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(gaps[2] < 0.02, "gap at 400 is " + fmt(gaps[2].convert_to<double>()));
  o.require(gaps[1] < gaps[0] && gaps[2] < gaps[1], "gap not shrinking");
  o.require(seconds < 300, "runtime " + fmt(seconds) + " s");
  o.detail = "relative gaps " + fmt(gaps[0].convert_to<double>()) + ", " + fmt(gaps[1].convert_to<double>()) + ", " +
             fmt(gaps[2].convert_to<double>()) + (o.pass ? "" : " | " + o.detail);
  return o;
}

Outcome halfplane_check() {
  Outcome o;
  exact::ScopedDigits scope(30);
  const PrecFloat limit = asymptotics::decimal(asymptotics::reference::kHalfplane);
  const PrecFloat gap = boost::multiprecision::abs(asymptotics::halfplane_ratio(400) / limit - 1);
  o.require(gap < 0.02, "ratio gap " + fmt(gap.convert_to<double>()));
  const auto entries = verify::ledger_entries();
  o.require(std::any_of(entries.begin(), entries.end(), [](const auto& e) { return e.key == "halfplane"; }),
            "no halfplane ledger entry");
  o.require(verify::run_suite(verify::Suite::interpretations, 20).passed(), "interpretations suite failed");
  if (o.pass) o.detail = "ratio gap " + fmt(gap.convert_to<double>()) + ", ledger entry present";
  return o;
}

Outcome growth_suite() {
  Outcome o;
  const auto free = enumerate::count_walks({ModelKind::free, 1}, 100);
  for (int p = 1; p <= 3; ++p) {
    for (auto kind : {ModelKind::symmetric, ModelKind::asymmetric}) {
      const auto report = enumerate::check_supermultiplicativity(enumerate::count_walks({kind, p}, 61), 30);
      o.require(report.ok, report.first_violation);
    }
    const auto sandwich = enumerate::check_sandwich(enumerate::count_walks({ModelKind::asymmetric, p}, 100),
                                                    enumerate::count_walks({ModelKind::symmetric, p}, 100), free);
    o.require(sandwich.ok, sandwich.first_violation);
  }
  for (int p = 1; p <= 2; ++p) {
    const auto report = enumerate::check_quarter_embedding(p, 6, 3);
    o.require(report.ok, report.first_violation);
  }
  const TSeries g = closedform::gf_series({closedform::GFTag::dyck}, 50);
  o.require(!exact::first_difference(g, TSeries::constant(1) + TSeries::variable() * g * g, 50), "Dyck fixed point");
  for (int p = 1; p <= 3; ++p) o.require(vanishes(closedform::gf_bargraph(p, 40).residual, 40), "bargraph p=" + std::to_string(p));
  if (o.pass) o.detail = "supermultiplicativity, sandwich, embedding, Dyck, bargraph";
  return o;
}

Outcome root_audit_check() {
  Outcome o;
  const auto audit = asymptotics::root_audit(20);
  o.require(audit.ok(), "undocumented root inside |t| < 1/2 or strategies disagree");
  int flagged = 0;
  for (const auto& row : audit.rows) {
    if (!row.flagged) continue;
    ++flagged;
    o.require(row.family == asymptotics::RootFamily::p_type && row.k == 0, "unexpected flagged row");
  }
  o.require(flagged == 1, "expected exactly one flagged root");
  if (o.pass) o.detail = "k = -1..20, one flagged root (P family, k = 0)";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> expect_fail;
  app.add_option("--expect-fail", expect_fail, "criteria known to fail")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"symmetric closed form equals enumeration", closed_form_symmetric},
      {"asymmetric closed form equals enumeration", closed_form_asymmetric},
      {"functional equation residuals", functional_equations},
      {"kernel root and composition identities", kernel_identities},
      {"three-constant formula accuracy table", accuracy_table},
      {"A0 analytic, A1 and A2 fits", constants_A},
      {"theta constant and printed constant consistency", theta_and_consistency},
      {"B0 ratio at n = 400", b0_ratio_check},
      {"half-plane ratio and ledger entry", halfplane_check},
      {"growth and property suite", growth_suite},
      {"root audit", root_audit_check},
  };

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int number = static_cast<int>(i) + 1;
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) failed.insert(number);
    std::printf("%s %2d %s: %s\n", outcome.pass ? "PASS" : "FAIL", number, criteria[i].first.c_str(),
                outcome.detail.c_str());
    std::fflush(stdout);
  }

  const std::set<int> expected(expect_fail.begin(), expect_fail.end());
  std::printf("%zu/%zu criteria pass\n", criteria.size() - failed.size(), criteria.size());
  if (failed != expected) {
    std::printf("failing criteria differ from the expected set\n");
    return 1;
  }
  return 0;
}
