#include "wedge/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "wedge/asymptotics.hpp"
#include "wedge/closedform.hpp"
#include "wedge/kernel.hpp"
#include "wedge/walks.hpp"

namespace wedge::verify {

namespace {

using exact::Rational;
using exact::TSeries;
using enumerate::ModelKind;

Check from_identity(const kernel::IdentityCheck& c) {
  Check out{c.identity, c.parameters, c.holds() ? Status::pass : Status::fail, "", ""};
  if (!c.holds()) out.detail = "first differing coefficient t^" + std::to_string(*c.first_bad_coefficient);
  return out;
}

Check from_comparison(const closedform::ComparisonReport& r, const std::string& ledger_key = "") {
  Check out{r.name + " = " + r.reference, "through t^" + std::to_string(r.order), Status::pass, "", ""};
  if (!r.agrees()) {
    out.status = ledger_key.empty() ? Status::fail : Status::reported;
    out.ledger_key = ledger_key;
    const auto& d = r.diffs.front();
    out.detail = "first mismatch at t^" + std::to_string(d.n) + ": " + exact::to_string(d.closed) + " vs " +
                 exact::to_string(d.reference) + " (" + std::to_string(r.diffs.size()) + " coefficients differ)";
  }
  if (!r.note.empty()) out.detail += out.detail.empty() ? r.note : "; " + r.note;
  return out;
}

Check zero_check(std::string identity, std::string parameters, const TSeries& residual, int order) {
  return from_identity(kernel::compare(std::move(identity), std::move(parameters), residual, TSeries::zero(order), order));
}

Check from_growth(std::string identity, std::string parameters, const enumerate::GrowthReport& r) {
  Check out{std::move(identity), std::move(parameters), r.ok ? Status::pass : Status::fail, "", ""};
  out.detail = r.ok ? std::to_string(r.checks) + " inequalities" : r.first_violation;
  return out;
}

std::string rational_param(const char* name, const Rational& value) {
  return std::string(name) + "=" + exact::to_string(value);
}

Verdict kernel_suite(int order) {
  Verdict v;
  const std::vector<Rational> points = {Rational(1), Rational(1, 2), Rational(3)};
  for (auto model : {kernel::Model::symmetric, kernel::Model::asymmetric}) {
    const kernel::KernelSystem sys{model, 1};
    for (const auto& a : points) {
      const TSeries beta = kernel::root(sys, kernel::Branch::beta_minus, a, order).expansion;
      const auto k = kernel::kernel_eval(sys, TSeries::constant(a), beta).K;
      v.checks.push_back(zero_check("K(a, beta_1(a)) = 0", kernel::to_string(model) + ", " + rational_param("a", a),
                                    k.truncated(order), order));
      if (model == kernel::Model::asymmetric) {
        const TSeries alpha = kernel::root(sys, kernel::Branch::alpha_minus, a, order).expansion;
        const auto ka = kernel::kernel_eval(sys, alpha, TSeries::constant(a)).K;
        v.checks.push_back(zero_check("K(alpha_1(b), b) = 0", "asymmetric, " + rational_param("b", a),
                                      ka.truncated(order), order));
      }
    }
  }
  for (const auto& a : {Rational(1, 2), Rational(2)}) {
    for (int n = -2; n <= kernel::kMaxCompositionDepth; ++n) {
      const auto it = kernel::beta_iterate(n, a, order);
      v.checks.push_back(from_identity(kernel::compare("beta_n closed form = repeated substitution",
                                                       "n=" + std::to_string(n) + ", " + rational_param("a", a),
                                                       it.closed_form, it.composed_form, order)));
    }
  }
  for (int n = 1; n < kernel::kMaxCompositionDepth; ++n) {
    for (const auto& c : kernel::group_law_check(n, Rational(1, 2), order)) v.checks.push_back(from_identity(c));
  }
  for (int n = 0; n <= 4; ++n) {
    const auto g = kernel::gamma_iterate(n, Rational(1), order);
    const std::string params = "n=" + std::to_string(n) + ", a=1";
    v.checks.push_back(
        from_identity(kernel::compare("gamma_n closed form = composition", params, g.gamma_closed, g.gamma_composed, order)));
    v.checks.push_back(from_identity(kernel::compare("beta_1(gamma_n) closed form = composition", params,
                                                     g.beta_gamma_closed, g.beta_gamma_composed, order)));
  }
  {
    const TSeries q = kernel::qpq_series(kernel::QKind::q_asym, Rational(1), order + 2);
    const TSeries qbar = kernel::qpq_series(kernel::QKind::qbar_asym, Rational(1), order + 2);
    v.checks.push_back(from_identity(
        kernel::compare("Qbar(a) Q(a) = t^3", "a=1", q * qbar, TSeries::monomial(Rational(1), 3), order - 1)));
  }
  for (int n = 0; n <= 3; ++n) {
    for (const auto& c : kernel::script_coeffs(n, Rational(1), std::min(order, 30)).checks) {
      v.checks.push_back(from_identity(c));
    }
  }
  return v;
}

Verdict funceq_suite(int order) {
  Verdict v;
  const std::vector<std::pair<Rational, Rational>> points = {
      {Rational(1, 2), Rational(1, 3)}, {Rational(2), Rational(3, 5)}, {Rational(-1, 3), Rational(5, 4)}};
  for (auto model : {kernel::Model::symmetric, kernel::Model::asymmetric}) {
    const ModelKind kind = model == kernel::Model::symmetric ? ModelKind::symmetric : ModelKind::asymmetric;
    for (int p = 1; p <= 3; ++p) {
      const auto weighted = enumerate::weighted_gf({kind, p}, order);
      const kernel::KernelSystem sys{model, p};
      for (const auto& [a, b] : points) {
        const std::string params = kernel::to_string(model) + ", p=" + std::to_string(p) + ", " +
                                   rational_param("a", a) + ", " + rational_param("b", b);
        v.checks.push_back(zero_check("functional equation residual", params,
                                      kernel::residual_functional_eq(sys, weighted, a, b, order), order));
        v.checks.push_back(zero_check("kernel form residual", params,
                                      kernel::residual_kernel_form(sys, weighted, a, b, order), order));
      }
    }
  }
  return v;
}

Verdict closedform_suite(int order) {
  using closedform::GFKind;
  using closedform::GFTag;
  Verdict v;
  const auto sym = enumerate::count_walks({ModelKind::symmetric, 1}, order);
  const auto asym = enumerate::count_walks({ModelKind::asymmetric, 1}, order);
  const auto free = enumerate::count_walks({ModelKind::free, 1}, order);
  v.checks.push_back(from_comparison(closedform::compare_with_counts({GFTag::sym_g1}, sym, order)));
  v.checks.push_back(from_comparison(closedform::compare_with_counts({GFTag::asym_k1}, asym, order)));
  v.checks.push_back(from_comparison(closedform::compare_with_counts({GFTag::free}, free, order)));

  const int weighted_order = std::min(order, 40);
  const auto sym_w = enumerate::weighted_gf({ModelKind::symmetric, 1}, weighted_order);
  const auto asym_w = enumerate::weighted_gf({ModelKind::asymmetric, 1}, weighted_order);
  v.checks.push_back(from_comparison(closedform::compare_series(
      "sym_f1", "symmetric enumeration f(1,1)", closedform::gf_series({GFTag::sym_f1}, weighted_order),
      sym_w.at(1, 1).truncated(weighted_order), weighted_order)));
  v.checks.push_back(from_comparison(closedform::compare_series(
      "asym_h1", "asymmetric enumeration h(1,1)", closedform::gf_series({GFTag::asym_h1}, weighted_order),
      asym_w.at(1, 1).truncated(weighted_order), weighted_order)));

  {
    const TSeries g = closedform::gf_series({GFTag::dyck}, order);
    const TSeries residual = g - TSeries::constant(1) - TSeries::monomial(Rational(1), 1) * g * g;
    v.checks.push_back(zero_check("g = 1 + t g^2", "Dyck", residual.truncated(order), order));
  }
  for (int p = 1; p <= 3; ++p) {
    const auto bar = closedform::gf_bargraph(p, order);
    v.checks.push_back(zero_check("bargraph fixed point residual", "p=" + std::to_string(p), bar.residual, order));
  }

  const int identity_order = std::min(order, 30);
  for (const auto& a : {Rational(1), Rational(1, 2)}) {
    const auto reports = closedform::solution_identities(a, identity_order);
    v.checks.push_back(from_comparison(reports[0]));
    v.checks.push_back(from_comparison(reports[1]));
    v.checks.push_back(from_comparison(reports[2], "h_raw"));
    v.checks.push_back(from_comparison(reports[3]));
  }
  return v;
}

Verdict interpretations_suite(int order) {
  Verdict v;
  const auto reports = closedform::interpretation_comparators(order);
  v.checks.push_back(from_comparison(reports[0], "interp_flat"));
  v.checks.push_back(from_comparison(reports[1], "interp_diag"));
  v.checks.push_back(from_comparison(reports[2], "interp_diag"));
  v.checks.push_back(from_comparison(closedform::halfplane_comparator(order), "halfplane"));
  return v;
}

Verdict growth_suite(int order) {
  Verdict v;
  constexpr int kPairs = 30;
  for (auto kind : {ModelKind::symmetric, ModelKind::asymmetric}) {
    for (int p = 1; p <= 3; ++p) {
      const auto table = enumerate::count_walks({kind, p}, 2 * kPairs + 1);
      const std::string params = enumerate::describe({kind, p});
      v.checks.push_back(from_growth("v_n v_m <= v_{n+m+1}", params + ", n,m <= 30",
                                     enumerate::check_supermultiplicativity(table, kPairs)));
      v.checks.push_back(from_growth("counts nondecreasing", params, enumerate::check_monotone(table)));
    }
  }
  const int n = std::max(order, 100);
  v.checks.push_back(from_growth("w_n <= v_n <= c_n", "p=1, n <= " + std::to_string(n),
                                 enumerate::check_sandwich(enumerate::count_walks({ModelKind::asymmetric, 1}, n),
                                                           enumerate::count_walks({ModelKind::symmetric, 1}, n),
                                                           enumerate::count_walks({ModelKind::free, 1}, n))));
  for (int p = 1; p <= 2; ++p) {
    v.checks.push_back(from_growth("b_n^N <= w_{ceil(np)+nN+N}", "p=" + std::to_string(p) + ", n <= 6, N <= 3",
                                   enumerate::check_quarter_embedding(p, 6, 3)));
  }
  return v;
}

// Ledger -----------------------------------------------------------------------------------

std::string series_head(const TSeries& s, int from, int to) {
  std::ostringstream out;
  for (int k = from; k <= to; ++k) out << (k > from ? ", " : "") << exact::to_string(s.coeff(k));
  return out.str();
}

std::string fmt(const exact::PrecFloat& x, unsigned digits) { return exact::to_decimal(x, digits); }

struct Probe {
  LedgerEntry entry;
  std::function<bool(LedgerEntry&)> observe;  ///< fills `observed`; false when the discrepancy is gone
  std::function<std::string()> explain;
};

std::vector<Probe> probes() {
  std::vector<Probe> out;

  out.push_back({{"halfplane", "halfplane formula: valuation -2 as printed", "generating function of walks above y = 0",
                  "", "enumeration"},
                 [](LedgerEntry& e) {
                   const auto r = closedform::halfplane_comparator(10);
                   e.observed = r.note + "; enumeration starts 1, 2, 4, 9, 20";
                   return !r.agrees();
                 },
                 [] {
                   const TSeries printed = closedform::gf_series({closedform::GFTag::halfplane}, 5);
                   const auto table = enumerate::count_walks({ModelKind::halfplane, 1}, 5);
                   std::ostringstream out;
                   out << "enumeration t^0..t^5: " << series_head(table.series(), 0, 5) << "\n";
                   out << "printed formula t^-2..t^5: " << series_head(printed, -2, 5) << "\n";
                   out << "The bounding constant sqrt((7+5 sqrt 2)/(2 pi)) is still reproduced by the counts.\n";
                   return out.str();
                 }});

  auto interp = [](int index) {
    return [index](LedgerEntry& e) {
      const auto r = closedform::interpretation_comparators(12)[index];
      if (r.agrees()) return false;
      e.observed = r.name + " vs " + r.reference + ": first mismatch at t^" + std::to_string(*r.first_mismatch);
      return true;
    };
  };
  auto interp_explain = [](int index) {
    return [index] {
      const auto r = closedform::interpretation_comparators(12)[index];
      std::ostringstream out;
      out << r.name << " vs " << r.reference << " (" << r.note << ")\n";
      for (const auto& d : r.diffs) {
        out << "  t^" << d.n << ": " << exact::to_string(d.closed) << " vs " << exact::to_string(d.reference) << "\n";
      }
      return out.str();
    };
  };
  out.push_back({{"interp_flat", "Q as boundary-walk generating function", "Q(1) read as t^3 times flat-boundary walks",
                  "", "enumeration"},
                 interp(0), interp_explain(0)});
  out.push_back({{"interp_diag", "P as boundary-walk generating function",
                  "P(1) read as t^3 times diagonal-boundary walks", "", "enumeration"},
                 interp(1), interp_explain(1)});

  out.push_back({{"h_raw", "unsimplified iteration sum for h(a,ta)", "sum of products of iteration coefficients",
                  "", "simplified sum (matches enumeration)"},
                 [](LedgerEntry& e) {
                   const auto r = closedform::solution_identities(Rational(1), 8)[2];
                   if (r.agrees()) return false;
                   e.observed = "first mismatch at t^" + std::to_string(*r.first_mismatch) +
                                "; the sum of iteration coefficients computed from the kernel agrees";
                   return true;
                 },
                 [] {
                   const auto r = closedform::solution_identities(Rational(1), 8);
                   std::ostringstream out;
                   out << "a=1, t^-1..t^6\n";
                   out << "unsimplified sum: " << series_head(closedform::gf_series({closedform::GFTag::H_aya_raw, 1, 1}, 8), -1, 6)
                       << "\n";
                   out << "simplified sum:   "
                       << series_head(closedform::gf_series({closedform::GFTag::H_aya_simplified, 1, 1}, 8), -1, 6) << "\n";
                   out << "iteration coefficients agree with simplified: " << (r[3].agrees() ? "yes" : "no") << "\n";
                   return out.str();
                 }});

  out.push_back({{"printed_p", "closed form of P(b)", "P(b) = Q(alpha_1(b)) displayed with a + square root", "",
                  "Q(alpha_1(b)) from the kernel root"},
                 [](LedgerEntry& e) {
                   const TSeries plus = closedform::printed_p_display(Rational(1), 1, 10);
                   const TSeries minus = closedform::printed_p_display(Rational(1), -1, 10);
                   const TSeries p = kernel::qpq_series(kernel::QKind::p_asym, Rational(1), 10);
                   const TSeries t2 = TSeries::monomial(Rational(1), 2);
                   const bool plus_ok = !exact::first_difference(plus, p, 10);
                   const bool minus_scaled = !exact::first_difference((t2 * minus).truncated(10), p, 10);
                   if (plus_ok) return false;
                   e.observed = std::string("+ branch starts ") + series_head(plus, 1, 3) +
                                (minus_scaled ? "; t^2 times the - branch equals Q(alpha_1(1))" : "");
                   return true;
                 },
                 [] {
                   std::ostringstream out;
                   out << "b=1, t^1..t^9\n";
                   out << "printed, + root: " << series_head(closedform::printed_p_display(Rational(1), 1, 10), 1, 9) << "\n";
                   out << "printed, - root: " << series_head(closedform::printed_p_display(Rational(1), -1, 10), 1, 9) << "\n";
                   out << "Q(alpha_1(1)):   "
                       << series_head(kernel::qpq_series(kernel::QKind::p_asym, Rational(1), 10), 1, 9) << "\n";
                   return out.str();
                 }});

  out.push_back({{"p_root_sign", "location of the in-disk P-family zero", "P-family zero at k = 0 stated as sqrt(2) - 1",
                  "", "companion-matrix roots"},
                 [](LedgerEntry& e) {
                   const auto audit = asymptotics::root_audit(0);
                   for (const auto& row : audit.rows) {
                     if (row.flagged) {
                       e.observed = row.note;
                       return true;
                     }
                   }
                   return false;
                 },
                 [] {
                   const auto c = asymptotics::audit_polynomial(asymptotics::RootFamily::p_type, 0);
                   std::ostringstream out;
                   out << "k=0 polynomial, constant term first:";
                   for (const auto& x : c) out << " " << exact::to_string(x);
                   out << "\n= (t - 1)(t^2 - 2t - 1), roots 1, 1 + sqrt 2, 1 - sqrt 2; only 1 - sqrt 2 = -0.41421 lies in "
                          "|t| < 1/2.\n";
                   return out.str();
                 }});

  out.push_back({{"b0_horizontal", "constant for walks ending horizontally",
                  "mu^n/sqrt(n) constant of h_1(1,1) versus that of k_1(1,1)", "", "analytic value and enumeration fit"},
                 [](LedgerEntry& e) {
                   const auto c = asymptotics::b0_consistency();
                   if (c.holds()) return false;
                   exact::ScopedDigits scope(30);
                   e.observed = "printed value times 1 + sqrt 2 = " + fmt(c.product, 12) + ", printed total constant " +
                                fmt(c.target, 12) + "; agreement " + fmt(exact::PrecFloat(c.agreeing_digits), 3) +
                                " digits";
                   return true;
                 },
                 [] {
                   std::ostringstream out;
                   const auto analytic = asymptotics::constant_B0_horizontal(asymptotics::Method::analytic, 20);
                   const auto fitted = asymptotics::constant_B0_horizontal(asymptotics::Method::fit, 20, 400);
                   out << "printed:          " << asymptotics::reference::kB0Half << "\n";
                   out << "analytic:         " << fmt(analytic.value, 20) << "\n";
                   out << "fit n in [200,400]: " << fmt(fitted.value, 12) << "\n";
                   out << "analytic times (1 + sqrt 2) reproduces the printed total constant "
                       << asymptotics::reference::kB0 << ".\n";
                   return out.str();
                 }});

  out.push_back({{"p2k_sum", "summed per-summand 1/sqrt(n) constants",
                  "second term of the per-summand asymptotic formula for the Q sum", "", "fit of the exact pieces"},
                 [](LedgerEntry& e) {
                   const auto reports = asymptotics::p_pieces_asymptotics(200);
                   for (const auto& r : reports) {
                     if (r.name == "p2_summed_sqrt_constant") {
                       if (r.agreeing_digits() >= 4) return false;
                       exact::ScopedDigits scope(30);
                       e.observed = "sum over k of the printed second terms = " + fmt(r.value, 10) + " versus " +
                                    asymptotics::reference::kB0Half;
                       return true;
                     }
                   }
                   return false;
                 },
                 [] {
                   std::ostringstream out;
                   for (const auto& r : asymptotics::p_pieces_asymptotics(400)) {
                     exact::ScopedDigits scope(30);
                     out << r.name << " = " << fmt(r.value, 12);
                     for (const auto& [k, v] : r.diagnostics) out << "; " << k << " = " << v;
                     out << "\n";
                   }
                   return out.str();
                 }});

  out.push_back({{"eq37_table", "accuracy of the three-constant formula for v_n",
                  "relative errors 7%, 1%, 0.2%, 0.06% at n = 10, 20, 30, 40", "", "exact counts"},
                 [](LedgerEntry& e) {
                   const auto rows = asymptotics::eq37_accuracy();
                   std::ostringstream out;
                   bool any = false;
                   out << "relative errors";
                   for (const auto& r : rows) {
                     out << " " << r.relative_error * 100 << "%";
                     any = any || !r.within();
                   }
                   out << "; stated figures are these truncated to one digit";
                   e.observed = out.str();
                   return any;
                 },
                 [] {
                   std::ostringstream out;
                   for (const auto& r : asymptotics::eq37_accuracy()) {
                     exact::ScopedDigits scope(30);
                     out << "n=" << r.n << " exact=" << exact::to_string(r.exact) << " estimate=" << fmt(r.estimate, 12)
                         << " error=" << r.relative_error * 100 << "% stated bound=" << r.bound * 100 << "%\n";
                   }
                   return out.str();
                 }});
  return out;
}

}  // namespace

std::string to_string(Status status) {
  switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::reported: return "reported";
  }
  return "fail";
}

bool Verdict::passed() const { return count(Status::fail) == 0; }

int Verdict::count(Status status) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [&](const Check& c) { return c.status == status; }));
}

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::kernel: return "kernel";
    case Suite::funceq: return "funceq";
    case Suite::closedform: return "closedform";
    case Suite::interpretations: return "interpretations";
    case Suite::growth: return "growth";
  }
  return "kernel";
}

Suite parse_suite(const std::string& name) {
  for (Suite s : all_suites()) {
    if (to_string(s) == name) return s;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<Suite> all_suites() {
  return {Suite::kernel, Suite::funceq, Suite::closedform, Suite::interpretations, Suite::growth};
}

int default_order(Suite suite) {
  switch (suite) {
    case Suite::kernel: return 40;
    case Suite::funceq: return 30;
    case Suite::closedform: return 50;
    case Suite::interpretations: return 20;
    case Suite::growth: return 100;
  }
  return 30;
}

Verdict run_suite(Suite suite, int order) {
  if (order < 8 || order > kMaxVerifyOrder) {
    throw std::invalid_argument("verification order must lie in 8.." + std::to_string(kMaxVerifyOrder));
  }
  Verdict v;
  switch (suite) {
    case Suite::kernel: v = kernel_suite(order); break;
    case Suite::funceq: v = funceq_suite(order); break;
    case Suite::closedform: v = closedform_suite(order); break;
    case Suite::interpretations: v = interpretations_suite(order); break;
    case Suite::growth: v = growth_suite(order); break;
  }
  v.suite = to_string(suite);
  v.order = order;
  return v;
}

std::vector<LedgerEntry> ledger_entries() {
  std::vector<LedgerEntry> out;
  for (auto& probe : probes()) {
    if (probe.observe(probe.entry)) out.push_back(probe.entry);
  }
  return out;
}

std::vector<std::string> ledger_keys() {
  std::vector<std::string> keys;
  for (const auto& probe : probes()) keys.push_back(probe.entry.key);
  return keys;
}

std::string ledger_explain(const std::string& key) {
  for (auto& probe : probes()) {
    if (probe.entry.key != key) continue;
    std::ostringstream out;
    const bool active = probe.observe(probe.entry);
    out << probe.entry.key << ": " << probe.entry.title << "\n";
    out << "where: " << probe.entry.location << "\n";
    out << "trusted: " << probe.entry.trusted << "\n";
    out << "status: " << (active ? probe.entry.observed : "no longer observed") << "\n";
    out << probe.explain();
    return out.str();
  }
  throw std::invalid_argument("unknown ledger entry '" + key + "'");
}

std::string format_ledger(const std::vector<LedgerEntry>& entries) {
  if (entries.empty()) return "no entries\n";
  std::ostringstream out;
  for (const auto& e : entries) {
    out << e.key << "  " << e.title << "\n";
    out << "  where:    " << e.location << "\n";
    out << "  observed: " << e.observed << "\n";
    out << "  trusted:  " << e.trusted << "\n";
  }
  return out.str();
}

}  // namespace wedge::verify
