#include "wedge/kernel.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace wedge::kernel {

namespace {

const TSeries kT = TSeries::variable();
const TSeries kOne = TSeries::constant(Rational(1));

TSeries tpow(int k) { return TSeries::monomial(Rational(1), k); }
TSeries cst(const Rational& c) { return TSeries::constant(c); }

// Exact polynomials are cut at the working order so that roots and inverses can be taken.
TSeries fit(const TSeries& s, int working) {
  if (s.is_exact() && s.coeffs().size() > 1) return s.truncated(working);
  if (!s.is_exact() && s.order() > working) return s.truncated(working);
  return s;
}

// (1 - t^{2m}) / (1 - t^2) as a Laurent polynomial.
TSeries geometric_block(int m) {
  std::vector<Rational> coeffs;
  if (m > 0) {
    coeffs.assign(static_cast<std::size_t>(2 * m - 1), Rational(0));
    for (int k = 0; k < m; ++k) coeffs[static_cast<std::size_t>(2 * k)] = 1;
    return TSeries::polynomial(std::move(coeffs), 0);
  }
  if (m < 0) {
    coeffs.assign(static_cast<std::size_t>(-2 * m - 1), Rational(0));
    for (int k = 0; k < -m; ++k) coeffs[static_cast<std::size_t>(2 * k)] = -1;
    return TSeries::polynomial(std::move(coeffs), 2 * m);
  }
  return TSeries();
}

// c t + c^2 t^2 + ... through t^order, i.e. ct/(1 - ct).
TSeries geometric_tail(const Rational& c, int order) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(order, 0)));
  Rational power = c;
  for (auto& x : coeffs) {
    x = power;
    power *= c;
  }
  return TSeries(1, std::move(coeffs), order);
}

bool is_minus(Branch which) { return which == Branch::beta_minus || which == Branch::alpha_minus; }
bool is_alpha(Branch which) { return which == Branch::alpha_minus || which == Branch::alpha_plus; }

// Both roots at working order: scale * (base - sqrt), scale * (base + sqrt).
std::array<TSeries, 2> candidate_roots(const KernelSystem& sys, Branch which, const TSeries& arg, int working) {
  if (sys.p != 1) throw std::invalid_argument("explicit kernel roots are available for p = 1 only");
  if (arg.is_zero()) throw exact::SeriesError("kernel root at a zero argument");
  const TSeries s = fit(arg, working);
  const TSeries t2 = tpow(2);
  const TSeries one_minus_t2 = kOne - t2;
  TSeries base;
  TSeries radicand;
  TSeries scale;
  if (sys.model == Model::symmetric) {
    const TSeries s2 = s * s;
    radicand = one_minus_t2 * (one_minus_t2 - Rational(4) * t2 * s2);
    base = kOne + t2;
    scale = s / (Rational(2) * fit(kT + kT * s2 - tpow(3) * s2, working));
  } else if (!is_alpha(which)) {
    const TSeries ts = kT * s;
    const TSeries up = kOne - ts;
    const TSeries down = kOne + ts;
    radicand = one_minus_t2 * (up * up - t2 * down * down);
    base = kOne + t2 - kT * one_minus_t2 * s;
    scale = s.shifted(-1) / Rational(2);
  } else {
    radicand = one_minus_t2 * (one_minus_t2 - Rational(4) * t2 * s);
    base = kOne + t2;
    scale = s / (Rational(2) * fit(kT + kT * one_minus_t2 * s, working));
  }
  const TSeries root = exact::sqrt(fit(radicand, working));
  return {scale * (base - root), scale * (base + root)};
}

// The candidate whose valuation matches the branch.
TSeries compute_root(const KernelSystem& sys, Branch which, const TSeries& arg, int working) {
  const auto candidates = candidate_roots(sys, which, arg, working);
  const int target = arg.valuation() + (is_minus(which) ? 1 : -1);
  const std::size_t preferred = is_minus(which) ? 0 : 1;
  if (candidates[preferred].valuation() == target) return candidates[preferred];
  if (candidates[1 - preferred].valuation() == target) return candidates[1 - preferred];
  throw BranchError("no branch of " + to_string(which) + " has valuation " + std::to_string(target) +
                    " at argument " + exact::to_string(arg));
}

// The root of K(arg, .) other than `known` (the symmetric kernel's roots at arg are
// consecutive neighbours of arg in the beta chain).
TSeries other_root(const TSeries& arg, const TSeries& known, int working) {
  const auto candidates = candidate_roots({Model::symmetric, 1}, Branch::beta_minus, arg, working);
  std::vector<const TSeries*> distinct;
  for (const auto& c : candidates) {
    const int upto = std::min(c.order(), known.order());
    if (exact::first_difference(c, known, upto)) distinct.push_back(&c);
  }
  if (distinct.size() != 1) throw BranchError("cannot separate the kernel roots at " + exact::to_string(arg));
  return *distinct.front();
}

KernelSystem symmetric_one() { return {Model::symmetric, 1}; }
KernelSystem asymmetric_one() { return {Model::asymmetric, 1}; }

TSeries beta1(const TSeries& a, int working) { return compute_root(symmetric_one(), Branch::beta_minus, a, working); }

// beta_n by repeated substitution. Forward steps take the power-series root; backward
// steps from valuation 0 onwards follow the chain, so each new element is the root
// that differs from the one two places back.
TSeries composed_at(int n, const TSeries& a, int working) {
  TSeries s = fit(a, working);
  if (n >= 0) {
    for (int k = 0; k < n; ++k) s = beta1(s, working);
    return s;
  }
  TSeries previous = beta1(s, working);
  for (int k = 0; k < -n; ++k) {
    TSeries next = other_root(s, previous, working);
    previous = std::move(s);
    s = std::move(next);
  }
  return s;
}

// beta_{-1} applied m times by the valuation-lowering branch; needs val(a) >= m.
TSeries lowered_at(int m, const TSeries& a, int working) {
  TSeries s = a;
  for (int k = 0; k < m; ++k) s = compute_root(symmetric_one(), Branch::beta_plus, s, working);
  return s;
}

struct GammaPair {
  TSeries gamma;
  TSeries beta_gamma;
};

GammaPair gamma_composed_at(int n, const TSeries& a, int working) {
  const KernelSystem sys = asymmetric_one();
  TSeries g = fit(a, working);
  for (int k = 0; k < n; ++k) {
    g = compute_root(sys, Branch::alpha_minus, compute_root(sys, Branch::beta_minus, g, working), working);
  }
  return {g, compute_root(sys, Branch::beta_minus, g, working)};
}

// Q(a) = 1/a - t/beta_1(a) - t for the asymmetric kernel.
TSeries q_asym_at(const TSeries& a, int working) {
  const TSeries s = fit(a, working);
  const TSeries b = compute_root(asymmetric_one(), Branch::beta_minus, s, working);
  return exact::inverse(s) - kT * exact::inverse(b) - kT;
}

GammaPair gamma_closed_at(int n, const TSeries& q) {
  const TSeries lo = kT + tpow(2 * n - 2) * q;
  const TSeries hi = kT + tpow(2 * n) * q;
  const TSeries one_minus_t2 = kOne - tpow(2);
  const TSeries gamma = exact::inverse(lo * hi / (tpow(2 * n - 2) * one_minus_t2 * q));
  const TSeries beta_gamma = exact::inverse(hi * hi / (tpow(2 * n - 1) * one_minus_t2 * q));
  return {gamma, beta_gamma};
}

int min_order(std::initializer_list<const TSeries*> list) {
  int out = exact::kExactOrder;
  for (const TSeries* s : list) out = std::min(out, s->order());
  return out;
}

std::string rational_param(const char* name, const Rational& value) {
  return std::string(name) + "=" + exact::to_string(value);
}

}  // namespace

std::string to_string(Model model) { return model == Model::symmetric ? "symmetric" : "asymmetric"; }

std::string to_string(Branch branch) {
  switch (branch) {
    case Branch::beta_minus:
      return "beta_minus";
    case Branch::beta_plus:
      return "beta_plus";
    case Branch::alpha_minus:
      return "alpha_minus";
    case Branch::alpha_plus:
      return "alpha_plus";
  }
  return "unknown";
}

std::string to_string(QKind kind) {
  switch (kind) {
    case QKind::q_sym:
      return "Q_sym";
    case QKind::q_asym:
      return "Q_asym";
    case QKind::qbar_asym:
      return "Qbar_asym";
    case QKind::p_asym:
      return "P_asym";
  }
  return "unknown";
}

Coefficients kernel_eval(const KernelSystem& sys, const TSeries& a, const TSeries& b) {
  if (sys.p < 1) throw std::invalid_argument("wedge slope p must be a positive integer");
  const TSeries t2 = tpow(2);
  const TSeries m = exact::pow(sys.model == Model::symmetric ? a * b : a, sys.p);
  const TSeries lower = b - kT * a;
  const TSeries upper = a - kT * b;
  Coefficients out;
  out.X = lower * upper;
  out.K = out.X * (kOne - kT * m) - t2 * m * (a * a + b * b - Rational(2) * kT * a * b);
  out.Y = -(t2 * a * m * upper);
  out.Z = -(t2 * m * b * lower);
  return out;
}

Coefficients kernel_eval(const KernelSystem& sys, const Rational& a, const Rational& b) {
  return kernel_eval(sys, cst(a), cst(b));
}

TSeries at_order(int order, const std::function<TSeries(int)>& compute) {
  for (int guard = 4; guard <= 512; guard *= 2) {
    TSeries result = compute(order + guard);
    if (result.order() >= order) return result.is_exact() ? result : result.truncated(order);
  }
  throw exact::SeriesError("could not determine the series through t^" + std::to_string(order));
}

TSeries root_of(const KernelSystem& sys, Branch which, const TSeries& arg, int order) {
  return at_order(order, [&](int working) { return compute_root(sys, which, arg, working); });
}

RootSeries root(const KernelSystem& sys, Branch which, const Rational& arg, int order) {
  return {which, cst(arg), root_of(sys, which, cst(arg), order)};
}

TSeries beta_closed(int n, const TSeries& beta1_value, const TSeries& a) {
  const TSeries reciprocal = tpow(1 - n) * geometric_block(n) * exact::inverse(beta1_value) -
                             tpow(2 - n) * geometric_block(n - 1) * exact::inverse(a);
  return exact::inverse(reciprocal);
}

TSeries beta_composed(int n, const TSeries& a, int order) {
  if (std::abs(n) > kMaxCompositionDepth) {
    throw std::invalid_argument("composition depth " + std::to_string(n) + " exceeds " +
                                std::to_string(kMaxCompositionDepth));
  }
  return at_order(order, [&](int working) { return composed_at(n, a, working); });
}

IteratedRoot beta_iterate(int n, const Rational& a, int order) {
  IteratedRoot out;
  out.n = n;
  out.closed_form = at_order(order, [&](int working) { return beta_closed(n, beta1(cst(a), working), cst(a)); });
  if (std::abs(n) <= kMaxCompositionDepth) {
    out.composed_form = beta_composed(n, cst(a), order);
  } else {
    out.composed_form = out.closed_form;
  }
  return out;
}

GammaIterate gamma_iterate(int n, const Rational& a, int order) {
  if (n < 0 || n > kMaxCompositionDepth) {
    throw std::invalid_argument("gamma index must lie in 0.." + std::to_string(kMaxCompositionDepth));
  }
  GammaIterate out;
  out.n = n;
  out.gamma_closed = at_order(order, [&](int w) { return gamma_closed_at(n, q_asym_at(cst(a), w)).gamma; });
  out.beta_gamma_closed =
      at_order(order, [&](int w) { return gamma_closed_at(n, q_asym_at(cst(a), w)).beta_gamma; });
  out.gamma_composed = at_order(order, [&](int w) { return gamma_composed_at(n, cst(a), w).gamma; });
  out.beta_gamma_composed = at_order(order, [&](int w) { return gamma_composed_at(n, cst(a), w).beta_gamma; });
  return out;
}

IdentityCheck compare(std::string identity, std::string parameters, const TSeries& lhs, const TSeries& rhs,
                      int order) {
  IdentityCheck out;
  out.identity = std::move(identity);
  out.parameters = std::move(parameters);
  out.order = order;
  out.first_bad_coefficient = exact::first_difference(lhs, rhs, order);
  return out;
}

std::vector<IdentityCheck> group_law_check(int n, const Rational& a, int order) {
  if (std::abs(n) > kMaxCompositionDepth - 1) {
    throw std::invalid_argument("group law checks need |n| <= " + std::to_string(kMaxCompositionDepth - 1));
  }
  const int m = std::abs(n);
  const std::string params = "n=" + std::to_string(n) + ", " + rational_param("a", a);
  const TSeries a_series = cst(a);
  std::vector<IdentityCheck> checks;

  const TSeries back_one = at_order(order, [&](int w) { return lowered_at(1, beta1(a_series, w), w); });
  checks.push_back(compare("beta_{-1}(beta_1(a)) = a", params, back_one, a_series, order));

  const TSeries back_composed = at_order(order, [&](int w) { return lowered_at(m, composed_at(m, a_series, w), w); });
  checks.push_back(compare("beta_{-n}(beta_n(a)) = a by repeated substitution", params, back_composed, a_series, order));

  const TSeries back_closed = at_order(order, [&](int w) {
    const TSeries forward = beta_closed(m, beta1(a_series, w), a_series);
    return beta_closed(-m, beta1(forward, w), forward);
  });
  checks.push_back(compare("beta_{-n}(beta_n(a)) = a by closed forms", params, back_closed, a_series, order));

  // beta_1(beta_{-m}(a)) = beta_{1-m}(a) in the group, so beta_m(beta_{-m}(a)) only needs closed forms.
  const TSeries forth_closed = at_order(order, [&](int w) {
    const TSeries b1 = beta1(a_series, w);
    return beta_closed(m, beta_closed(1 - m, b1, a_series), beta_closed(-m, b1, a_series));
  });
  checks.push_back(compare("beta_n(beta_{-n}(a)) = a by closed forms", params, forth_closed, a_series, order));

  const TSeries neighbours = at_order(order, [&](int w) {
    const TSeries b1 = beta1(a_series, w);
    return kernel_eval(symmetric_one(), beta_closed(-m, b1, a_series), beta_closed(1 - m, b1, a_series)).K;
  });
  checks.push_back(compare("K(beta_{-n}(a), beta_{1-n}(a)) = 0", params, neighbours, TSeries(), order));

  const TSeries recurrence = at_order(order, [&](int w) {
    const TSeries here = composed_at(n, a_series, w);
    const TSeries prev = composed_at(n - 1, a_series, w);
    const TSeries prev2 = composed_at(n - 2, a_series, w);
    return exact::inverse(here) - (kOne + tpow(2)).shifted(-1) * exact::inverse(prev) + exact::inverse(prev2);
  });
  checks.push_back(
      compare("1/beta_n = (t + 1/t)/beta_{n-1} - 1/beta_{n-2}", params, recurrence, TSeries(), order));
  return checks;
}

TSeries qpq_series(QKind kind, const TSeries& arg, int order) {
  return at_order(order, [&](int working) {
    const TSeries s = fit(arg, working);
    switch (kind) {
      case QKind::q_sym: {
        const TSeries b = beta1(s, working);
        return exact::inverse(kT * s * s) - exact::inverse(s * b) - kT;
      }
      case QKind::q_asym:
        return q_asym_at(s, working);
      case QKind::qbar_asym: {
        const TSeries b = compute_root(asymmetric_one(), Branch::beta_minus, s, working);
        return exact::inverse(b) - kT * exact::inverse(s) - tpow(2);
      }
      case QKind::p_asym:
        return q_asym_at(compute_root(asymmetric_one(), Branch::alpha_minus, s, working), working);
    }
    throw std::invalid_argument("unknown Q kind");
  });
}

TSeries qpq_series(QKind kind, const Rational& arg, int order) { return qpq_series(kind, cst(arg), order); }

TSeries residual_functional_eq(const KernelSystem& sys, const enumerate::WeightedSeries& weighted, const Rational& a,
                               const Rational& b, int order) {
  if (weighted.order() < order) throw std::invalid_argument("weighted series is shorter than the requested order");
  if (sgn(a) == 0 || sgn(b) == 0) throw std::invalid_argument("a and b must be nonzero");
  const Rational ab = sys.model == Model::symmetric ? a * b : a;
  Rational m = 1;
  for (int k = 0; k < sys.p; ++k) m *= ab;
  const TSeries f = weighted.at(a, b).truncated(order);
  const TSeries f_lower = weighted.diagonal_lower(a).truncated(order);
  const TSeries f_upper = weighted.diagonal_upper(b).truncated(order);
  const TSeries step = kT * m;
  const TSeries rhs = kOne + step * f + step * geometric_tail(b / a, order) * (f - f_upper) +
                      step * geometric_tail(a / b, order) * (f - f_lower);
  return (f - rhs).truncated(order);
}

TSeries residual_functional_eq(const KernelSystem& sys, const Rational& a, const Rational& b, int order) {
  const enumerate::ModelKind kind =
      sys.model == Model::symmetric ? enumerate::ModelKind::symmetric : enumerate::ModelKind::asymmetric;
  return residual_functional_eq(sys, enumerate::weighted_gf({kind, sys.p}, order), a, b, order);
}

TSeries residual_kernel_form(const KernelSystem& sys, const enumerate::WeightedSeries& weighted, const Rational& a,
                             const Rational& b, int order) {
  if (weighted.order() < order) throw std::invalid_argument("weighted series is shorter than the requested order");
  const Coefficients c = kernel_eval(sys, a, b);
  const TSeries f = weighted.at(a, b).truncated(order);
  const TSeries residual =
      c.K * f - c.X - c.Y * weighted.diagonal_lower(a).truncated(order) - c.Z * weighted.diagonal_upper(b).truncated(order);
  return residual.truncated(order);
}

ScriptCoefficients script_coeffs(int n, const Rational& a, int order) {
  if (n < 0 || n + 1 > kMaxCompositionDepth) {
    throw std::invalid_argument("iteration index must lie in 0.." + std::to_string(kMaxCompositionDepth - 1));
  }
  const KernelSystem sys = asymmetric_one();
  const TSeries a_series = cst(a);
  const std::string params = "n=" + std::to_string(n) + ", " + rational_param("a", a);
  for (int guard = 8; guard <= 512; guard *= 2) {
    const int w = order + guard;
    const GammaPair here = gamma_composed_at(n, a_series, w);
    const GammaPair next = gamma_composed_at(n + 1, a_series, w);
    const TSeries q = q_asym_at(a_series, w);
    const GammaPair here_closed = gamma_closed_at(n, q);
    const GammaPair next_closed = gamma_closed_at(n + 1, q);

    ScriptCoefficients out;
    out.n = n;
    const Coefficients at_here = kernel_eval(sys, here.gamma, here.beta_gamma);
    const Coefficients at_next = kernel_eval(sys, next.gamma, here.beta_gamma);
    out.X = -(at_here.X / at_here.Y);
    out.Y = at_here.Z / at_here.Y;
    out.Z = at_next.X / at_next.Z;
    out.A = at_next.Y / at_next.Z;
    out.B = out.X + out.Y * out.Z;
    out.C = out.Y * out.A;

    const TSeries shifted_q = tpow(2 * n) * q;
    out.B_simplified = (kT + tpow(2 * n - 2) * q) * (kT - shifted_q) / tpow(2);
    out.C_simplified = next_closed.gamma / here_closed.gamma * tpow(4 * n - 2) * q * q;

    const TSeries g = here.gamma;
    const TSeries bg = here.beta_gamma;
    const TSeries g1 = next.gamma;
    const TSeries inv_g = exact::inverse(g);
    const TSeries inv_bg = exact::inverse(bg);
    const TSeries inv_g1 = exact::inverse(g1);
    const TSeries common = kT + shifted_q;
    const TSeries e1 = inv_g - kT * inv_bg;
    const TSeries e2 = inv_bg - kT * inv_g;
    const TSeries e2_rhs = kT * common / (tpow(2 * n - 1) * q);
    const TSeries e3 = inv_bg - kT * inv_g1;
    const TSeries e4 = inv_g1 - kT * inv_bg;
    const TSeries e4_rhs = kT * common / shifted_q;
    const TSeries r1 = (bg - kT * g) / (g - kT * bg);
    const TSeries r2 = (g1 - kT * bg) / (bg - kT * g1);
    const TSeries r1_rhs = tpow(2 * n - 2) * q;

    if (min_order({&out.B, &out.C, &out.B_simplified, &out.C_simplified, &e1, &e2, &e2_rhs, &e3, &e4, &e4_rhs, &r1,
                   &r2, &here_closed.gamma, &here_closed.beta_gamma}) < order) {
      continue;
    }
    out.checks.push_back(compare("B_n raw = simplified", params, out.B, out.B_simplified, order));
    out.checks.push_back(compare("C_n raw = simplified", params, out.C, out.C_simplified, order));
    out.checks.push_back(compare("gamma_n closed = composed", params, here_closed.gamma, g, order));
    out.checks.push_back(compare("beta_1(gamma_n) closed = composed", params, here_closed.beta_gamma, bg, order));
    out.checks.push_back(compare("1/gamma_n - t/beta_1(gamma_n) = t + t^{2n} Q", params, e1, common, order));
    out.checks.push_back(
        compare("1/beta_1(gamma_n) - t/gamma_n = t (t + t^{2n} Q)/(t^{2n-1} Q)", params, e2, e2_rhs, order));
    out.checks.push_back(compare("1/beta_1(gamma_n) - t/gamma_{n+1} = t (t + t^{2n} Q)", params, e3, kT * common, order));
    out.checks.push_back(
        compare("1/gamma_{n+1} - t/beta_1(gamma_n) = t (t + t^{2n} Q)/(t^{2n} Q)", params, e4, e4_rhs, order));
    out.checks.push_back(compare("(beta_1(gamma_n) - t gamma_n)/(gamma_n - t beta_1(gamma_n)) = t^{2n-2} Q", params, r1,
                                 r1_rhs, order));
    out.checks.push_back(compare("(gamma_{n+1} - t beta_1(gamma_n))/(beta_1(gamma_n) - t gamma_{n+1}) = t^{2n} Q",
                                 params, r2, shifted_q, order));
    return out;
  }
  throw exact::SeriesError("could not determine the iteration coefficients through t^" + std::to_string(order));
}

}  // namespace wedge::kernel
