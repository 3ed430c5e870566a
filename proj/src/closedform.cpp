#include "wedge/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

#include "wedge/kernel.hpp"

namespace wedge::closedform {

namespace {

using kernel::at_order;

const TSeries kT = TSeries::variable();
const TSeries kOne = TSeries::constant(Rational(1));

TSeries tpow(int k) { return TSeries::monomial(Rational(1), k); }

TSeries poly(std::vector<long> coeffs) {
  std::vector<Rational> out;
  out.reserve(coeffs.size());
  for (long c : coeffs) out.emplace_back(c);
  return TSeries::polynomial(std::move(out));
}

TSeries cut(const TSeries& s, int working) {
  if (s.is_exact() && s.coeffs().size() > 1) return s.truncated(working);
  if (!s.is_exact() && s.order() > working) return s.truncated(working);
  return s;
}

TSeries sqrt_at(const TSeries& radicand, int working) { return exact::sqrt(cut(radicand, working)); }

// sqrt((1-t^2)(1-5t^2)) and 1 - 2t - t^2.
TSeries root_sym(int working) { return sqrt_at(poly({1, 0, -6, 0, 5}), working); }
TSeries pole_factor(int working) { return cut(poly({1, -2, -1}), working); }

void require_positive_valuation(const TSeries& q) {
  if (q.is_zero() || q.valuation() < 1) {
    throw exact::SeriesError("theta-type sums need an argument of positive valuation");
  }
}

TSeries truncate_to(const TSeries& s, int order) { return s.order() > order ? s.truncated(order) : s; }

TSeries h1_at(int working, HPieces* pieces) {
  const TSeries d = pole_factor(working);
  const TSeries q = printed_q_asym(working);
  const TSeries p = printed_q_sym(working);
  const TSeries one_minus_t2 = poly({1, 0, -1});
  HPieces out;
  out.p1 = (poly({1, -2, 1}) - root_sym(working)) / (Rational(2) * d);
  out.p2 = -(q * one_minus_t2 / (tpow(2) * d)) * theta_sum_asym(q, working);
  out.p3 = one_minus_t2 / d * theta_sum_asym(p, working);
  if (pieces != nullptr) *pieces = out;
  return out.p1 + out.p2 + out.p3;
}

// (1 - t^{2m}) / (1 - t^2).
TSeries block(int m) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(2 * m - 1, 0)), Rational(0));
  for (int k = 0; k < m; ++k) coeffs[static_cast<std::size_t>(2 * k)] = 1;
  return TSeries::polynomial(std::move(coeffs));
}

// The unsimplified sum for h(a, ta) in terms of a and beta = beta_1(a).
TSeries h_aya_raw_at(const Rational& a, int order, int working) {
  const kernel::KernelSystem sys{kernel::Model::asymmetric, 1};
  const TSeries beta = kernel::root_of(sys, kernel::Branch::beta_minus, TSeries::constant(a), working);
  const TSeries one_plus_beta = kOne + beta;
  // a - beta t - a beta t^2 + a beta t^{2m+2}
  auto lower = [&](int m) { return a - kT * beta - a * tpow(2) * beta + a * tpow(2 * m + 2) * beta; };
  // a(1+beta) t^{2m} - beta (a + t^{2m-1})
  auto upper = [&](int m) { return a * tpow(2 * m) * one_plus_beta - beta * (TSeries::constant(a) + tpow(2 * m - 1)); };
  TSeries sum = TSeries::zero(working);
  TSeries product = kOne;
  int quiet = 0;
  const int n_limit = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(working)))) + 12;
  for (int n = 0; n <= n_limit; ++n) {
    product = product * (upper(n) / lower(n));
    const TSeries middle = lower(n) / upper(n);
    const TSeries numer = TSeries::constant(a) - kT * beta - a * tpow(2) * beta - tpow(4 * n + 1) * beta +
                          a * tpow(4 * n + 2) * one_plus_beta;
    const TSeries denom = TSeries::constant(a) + block(n) * (a * tpow(2) * (kOne - beta) + a * tpow(2 * n + 2) * one_plus_beta) -
                          block(2 * n) * beta * kT;
    const TSeries term = -(tpow(2 * (n + 1) * (n + 1) - 3) / a) * middle * (numer / denom) * product;
    sum = sum + term;
    quiet = term.valuation() > order ? quiet + 1 : 0;
    if (quiet >= 2 && 2 * (n + 1) * (n + 1) - 3 - 4 * (n + 1) > order) return sum;
  }
  throw exact::SeriesError("unsimplified h(a,ta) sum did not settle within the term limit");
}

// sum B_n prod_{m<n} C_m with the iteration coefficients taken from composed roots.
TSeries h_aya_iterated(const Rational& a, int order) {
  TSeries sum = TSeries::zero(order);
  TSeries product = kOne;
  for (int n = 0; n + 1 <= kernel::kMaxCompositionDepth; ++n) {
    if (product.valuation() > order) return truncate_to(sum, order);
    const kernel::ScriptCoefficients sc = kernel::script_coeffs(n, a, order);
    sum = sum + sc.B * product;
    product = truncate_to(product * sc.C, order);
  }
  if (product.valuation() > order) return truncate_to(sum, order);
  return truncate_to(sum, std::min(order, product.valuation() - 1));
}

struct TagName {
  GFTag tag;
  const char* name;
};

constexpr TagName kTagNames[] = {
    {GFTag::free, "free"},
    {GFTag::dyck, "dyck"},
    {GFTag::bargraph, "bargraph"},
    {GFTag::sym_f1, "sym_f1"},
    {GFTag::sym_g1, "sym_g1"},
    {GFTag::asym_h1, "asym_h1"},
    {GFTag::asym_k1, "asym_k1"},
    {GFTag::halfplane, "halfplane"},
    {GFTag::theta_sym, "theta_sym"},
    {GFTag::theta_asym, "theta_asym"},
    {GFTag::F_aya, "F_aya"},
    {GFTag::H_aya_raw, "H_aya_raw"},
    {GFTag::H_aya_simplified, "H_aya_simplified"},
};

const char* tag_name(GFTag tag) {
  for (const auto& entry : kTagNames) {
    if (entry.tag == tag) return entry.name;
  }
  return "unknown";
}

bool takes_rational(GFTag tag) {
  return tag == GFTag::theta_sym || tag == GFTag::F_aya || tag == GFTag::H_aya_raw || tag == GFTag::H_aya_simplified;
}

}  // namespace

std::vector<std::string> gf_tag_names() {
  std::vector<std::string> out;
  for (const auto& entry : kTagNames) out.emplace_back(entry.name);
  return out;
}

GFKind parse_gf_kind(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string tail = colon == std::string::npos ? "" : text.substr(colon + 1);
  GFKind kind;
  bool found = false;
  for (const auto& entry : kTagNames) {
    if (head == entry.name) {
      kind.tag = entry.tag;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("unknown generating function '" + head + "'");
  if (kind.tag == GFTag::bargraph) {
    if (!tail.empty()) {
      std::size_t used = 0;
      kind.p = std::stoi(tail, &used);
      if (used != tail.size() || kind.p < 1) throw std::invalid_argument("bargraph needs a positive integer p");
    }
  } else if (kind.tag == GFTag::theta_asym) {
    if (tail == "P" || tail == "p") {
      kind.theta_arg = ThetaArgument::p;
    } else if (!tail.empty() && tail != "Q" && tail != "q") {
      throw std::invalid_argument("theta_asym takes Q or P");
    }
  } else if (takes_rational(kind.tag)) {
    if (!tail.empty()) kind.arg = exact::parse_rational(tail);
    if (sgn(kind.arg) == 0) throw std::invalid_argument("the argument must be nonzero");
  } else if (!tail.empty()) {
    throw std::invalid_argument("'" + head + "' takes no parameter");
  }
  return kind;
}

std::string to_string(const GFKind& kind) {
  std::string out = tag_name(kind.tag);
  if (kind.tag == GFTag::bargraph) out += ":" + std::to_string(kind.p);
  if (kind.tag == GFTag::theta_asym) out += kind.theta_arg == ThetaArgument::p ? ":P" : ":Q";
  if (takes_rational(kind.tag)) out += ":" + exact::to_string(kind.arg);
  return out;
}

TSeries theta_sum_sym(const TSeries& q, int order) {
  require_positive_valuation(q);
  const int v = q.valuation();
  const TSeries base = cut(q, order);
  TSeries sum = kOne;
  TSeries power = kOne;
  for (int n = 1; n * n + n * v <= order; ++n) {
    power = power * base;
    const TSeries term = tpow(n * n) * power;
    sum = n % 2 == 0 ? sum + term : sum - term;
  }
  return truncate_to(sum.is_exact() ? sum.truncated(order) : sum, order);
}

TSeries theta_sum_asym(const TSeries& q, int order) {
  require_positive_valuation(q);
  const int v = q.valuation();
  const TSeries base = cut(q, order + 1);
  const TSeries over_t = base.shifted(-1);
  const TSeries over_t2 = over_t * over_t;
  TSeries sum = TSeries::zero(order);
  TSeries power = kOne;  // (q/t)^{2n}
  for (int n = 0; n == 0 || 2 * n * n + 2 * n * (v - 1) <= order; ++n) {
    if (n > 0) power = power * over_t2;
    const TSeries u = base.shifted(2 * n - 1);
    const TSeries ratio = (kOne - u) / (kOne + u);
    sum = sum + ratio * power * tpow(2 * n * n);
  }
  return truncate_to(sum, order);
}

TSeries printed_q_sym(int order) {
  return at_order(order, [](int w) { return (poly({1, 0, -3}) - root_sym(w)) / TSeries::monomial(Rational(2), 1); });
}

TSeries printed_q_asym(int order) {
  return at_order(order, [](int w) {
    // (1 - t^4)(1 - 2t - t^2)
    const TSeries root = sqrt_at(poly({1, -2, -1, 0, -1, 2, 1}), w);
    return (poly({1, -1, -1, -1}) - root) / Rational(2);
  });
}

TSeries printed_p_display(const Rational& b, int sign, int order) {
  if (sgn(b) == 0) throw std::invalid_argument("b must be nonzero");
  return at_order(order, [&](int w) {
    // (1 - t^2)(1 - (1 + 4b) t^2)
    const Rational c = 1 + 4 * b;
    const TSeries radicand = poly({1, 0, -1}) * (kOne - c * tpow(2));
    const TSeries root = sqrt_at(radicand, w);
    const TSeries inner = kOne - (2 * b + 1) * tpow(2);
    return (sign >= 0 ? inner + root : inner - root) * TSeries::monomial(1 / (2 * b), 1);
  });
}

Bargraph gf_bargraph(int p, int order) {
  if (p < 1) throw std::invalid_argument("bargraph needs p >= 1");
  const TSeries lead = tpow(p + 1);
  auto rhs = [&](const TSeries& h) {
    const TSeries one_h = kOne + h;
    const TSeries denom = cut(kOne - tpow(2) * one_h, order);
    return truncate_to(lead * exact::pow(one_h, p) * (kOne + h / denom), order);
  };
  Bargraph out;
  TSeries h = TSeries::zero(order);
  for (int it = 1; it <= order + 2; ++it) {
    TSeries next = rhs(h);
    out.iterations = it;
    if (next.order() >= order && h.order() >= order && !exact::first_difference(next, h, order)) {
      out.h = h;
      out.residual = (h - next).truncated(order);
      out.g = truncate_to(h / cut(kOne - tpow(2) * (kOne + h), order), order);
      return out;
    }
    h = std::move(next);
  }
  throw exact::SeriesError("bargraph fixed point did not settle within " + std::to_string(order + 2) + " iterations");
}

HPieces asym_h1_pieces(int order) {
  HPieces pieces;
  for (int guard = 4; guard <= 512; guard *= 2) {
    h1_at(order + guard, &pieces);
    if (pieces.p1.order() >= order && pieces.p2.order() >= order && pieces.p3.order() >= order) {
      return {pieces.p1.truncated(order), pieces.p2.truncated(order), pieces.p3.truncated(order)};
    }
  }
  throw exact::SeriesError("could not assemble h_1 through t^" + std::to_string(order));
}

TSeries p2_summand(int k, int order) {
  if (k < 0) throw std::invalid_argument("summand index must be nonnegative");
  return at_order(order, [&](int w) {
    const TSeries q = printed_q_asym(w);
    const TSeries u = q.shifted(2 * k - 1);
    const TSeries prefactor = -(q * poly({1, 0, -1}) / (tpow(2) * pole_factor(w)));
    return prefactor * ((kOne - u) / (kOne + u)) * exact::pow(q.shifted(-1), 2 * k) * tpow(2 * k * k);
  });
}

TSeries gf_series(const GFKind& kind, int order) {
  if (order < 0 || order > kMaxSeriesOrder) {
    throw std::invalid_argument("series order must lie in 0.." + std::to_string(kMaxSeriesOrder));
  }
  switch (kind.tag) {
    case GFTag::free:
      return at_order(order, [](int w) { return poly({1, 1}) / pole_factor(w); });
    case GFTag::dyck:
      return at_order(order, [](int w) {
        return (kOne - sqrt_at(poly({1, -4}), w)) / TSeries::monomial(Rational(2), 1);
      });
    case GFTag::bargraph:
      return gf_bargraph(kind.p, order).g;
    case GFTag::sym_f1:
      return at_order(order, [](int w) {
        const TSeries d = pole_factor(w);
        const TSeries s = theta_sum_sym(printed_q_sym(w), w);
        return poly({1, -1}) / d - (poly({1, 0, -1}) - root_sym(w)) / d * s;
      });
    case GFTag::sym_g1:
      return at_order(order, [](int w) {
        const TSeries d = pole_factor(w);
        const TSeries s = theta_sum_sym(printed_q_sym(w), w);
        return poly({1, 1}) / d - (poly({1, 0, -1}) - root_sym(w)) / (kT * d) * s;
      });
    case GFTag::asym_h1:
      return at_order(order, [](int w) { return h1_at(w, nullptr); });
    case GFTag::asym_k1:
      return at_order(order, [](int w) { return (h1_at(w, nullptr) - kOne).shifted(-1); });
    case GFTag::halfplane:
      return at_order(order, [](int w) {
        // -1 + z + 3z^2 + z^3 - sqrt((1 - z^4)(1 - 2z - z^2)) over 2z^2(z^2 - 2z - 1)
        const TSeries root = sqrt_at(poly({1, -2, -1, 0, -1, 2, 1}), w);
        return (poly({-1, 1, 3, 1}) - root) / cut(poly({0, 0, -2, -4, 2}), w);
      });
    case GFTag::theta_sym:
      return at_order(order, [&](int w) {
        return theta_sum_sym(kernel::qpq_series(kernel::QKind::q_sym, kind.arg, w), w);
      });
    case GFTag::theta_asym:
      return at_order(order, [&](int w) {
        return theta_sum_asym(kind.theta_arg == ThetaArgument::q ? printed_q_asym(w) : printed_q_sym(w), w);
      });
    case GFTag::F_aya:
      return at_order(order, [&](int w) {
        const TSeries q = kernel::qpq_series(kernel::QKind::q_sym, kind.arg, w);
        return (kOne + q.shifted(-1)) * theta_sum_sym(q, w);
      });
    case GFTag::H_aya_raw:
      return at_order(order, [&](int w) { return h_aya_raw_at(kind.arg, order, w); });
    case GFTag::H_aya_simplified:
      return at_order(order, [&](int w) {
        const TSeries q = kernel::qpq_series(kernel::QKind::q_asym, kind.arg, w);
        return poly({1, 0, -1}) * q / TSeries::monomial(kind.arg, 4) * theta_sum_asym(q, w);
      });
  }
  throw std::invalid_argument("unknown generating function");
}

ComparisonReport compare_series(std::string name, std::string reference, const TSeries& closed,
                                const TSeries& expected, int order) {
  if (closed.order() < order || expected.order() < order) {
    throw exact::SeriesError("comparison of '" + name + "' through t^" + std::to_string(order) +
                             " exceeds the known orders");
  }
  ComparisonReport out;
  out.name = std::move(name);
  out.reference = std::move(reference);
  out.order = order;
  const int lo = std::min({closed.is_zero() ? 0 : closed.valuation(), expected.is_zero() ? 0 : expected.valuation(), 0});
  for (int k = lo; k <= order; ++k) {
    Rational c = closed.coeff(k);
    Rational e = expected.coeff(k);
    if (c != e) {
      if (!out.first_mismatch) out.first_mismatch = k;
      out.diffs.push_back({k, std::move(c), std::move(e)});
    }
  }
  return out;
}

ComparisonReport compare_with_counts(const GFKind& kind, const enumerate::CountTable& table, int order) {
  if (table.max_length() < order) throw std::invalid_argument("count table is shorter than the requested order");
  return compare_series(to_string(kind), "enumeration " + enumerate::describe(table.model), gf_series(kind, order),
                        table.series().truncated(order), order);
}

std::vector<ComparisonReport> solution_identities(const Rational& a, int order) {
  using enumerate::ModelKind;
  const auto sym = enumerate::weighted_gf({ModelKind::symmetric, 1}, order);
  const auto asym = enumerate::weighted_gf({ModelKind::asymmetric, 1}, order);
  const std::string at = "a=" + exact::to_string(a);
  GFKind f_kind{GFTag::F_aya, 1, a};
  GFKind h_kind{GFTag::H_aya_simplified, 1, a};
  GFKind raw_kind{GFTag::H_aya_raw, 1, a};
  const TSeries h_simplified = gf_series(h_kind, order);
  std::vector<ComparisonReport> out;
  out.push_back(compare_series("f(a,ta) theta sum, " + at, "symmetric enumeration f(a,ta)", gf_series(f_kind, order),
                               sym.diagonal_lower(a).truncated(order), order));
  out.push_back(compare_series("h(a,ta) simplified sum, " + at, "asymmetric enumeration h(a,ta)", h_simplified,
                               asym.diagonal_lower(a).truncated(order), order));
  out.push_back(compare_series("h(a,ta) unsimplified sum, " + at, "h(a,ta) simplified sum", gf_series(raw_kind, order),
                               h_simplified, order));
  out.push_back(compare_series("h(a,ta) from iteration coefficients, " + at, "h(a,ta) simplified sum",
                               h_aya_iterated(a, order), h_simplified, order));
  return out;
}

std::vector<ComparisonReport> interpretation_comparators(int order) {
  using enumerate::ModelKind;
  const TSeries flat = enumerate::count_walks({ModelKind::boundary_flat, 1}, order).series();
  const TSeries diag = enumerate::count_walks({ModelKind::boundary_diag, 1}, order).series();
  const TSeries t3 = tpow(3);
  const TSeries flat_side = (t3 * (flat - kOne)).truncated(order);
  const TSeries diag_side = (t3 * (diag - kOne)).truncated(order);
  const std::string note = "B counts the empty walk as its constant term 1; B - 1 removes it";
  std::vector<ComparisonReport> out;
  out.push_back(compare_series("Q(1) = 1 - t/beta_1(1) - t", "t^3 (B_flat - 1)",
                               kernel::qpq_series(kernel::QKind::q_asym, Rational(1), order), flat_side, order));
  out.push_back(compare_series("P(1) = Q(alpha_1(1))", "t^3 (B_diag - 1)",
                               kernel::qpq_series(kernel::QKind::p_asym, Rational(1), order), diag_side, order));
  out.push_back(compare_series("P(1) as used in h_1(1,1)", "t^3 (B_diag - 1)", printed_q_sym(order), diag_side, order));
  for (auto& r : out) r.note = note;
  return out;
}

ComparisonReport halfplane_comparator(int order) {
  const auto table = enumerate::count_walks({enumerate::ModelKind::halfplane, 1}, order);
  const TSeries printed = gf_series({GFTag::halfplane}, order);
  ComparisonReport out = compare_series("half-plane formula as printed", "enumeration of walks above y = 0", printed,
                                        table.series(), order);
  out.note = "printed expression has valuation " + std::to_string(printed.valuation());
  return out;
}

}  // namespace wedge::closedform
