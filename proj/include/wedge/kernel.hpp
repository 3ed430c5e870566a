#pragma once

// Kernel-method machinery for the wedge functional equations, specialised to x = y = t.
//
// For the symmetric wedge the equation reads
//   K(a,b) f(a,b) = X(a,b) + Y(a,b) f(a,ta) + Z(a,b) f(tb,b)
// with K, X, Y, Z polynomial in a, b, t; the asymmetric wedge has the same shape with
// (ab)^p replaced by a^p. Roots of K are Laurent series in t, and their iterated
// compositions have closed forms that are checked here coefficient by coefficient.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wedge/series.hpp"
#include "wedge/walks.hpp"

namespace wedge::kernel {

using exact::Rational;
using exact::TSeries;

enum class Model { symmetric, asymmetric };

std::string to_string(Model model);

struct KernelSystem {
  Model model = Model::symmetric;
  int p = 1;
};

/// The coefficient quadruple of the kernel form.
struct Coefficients {
  TSeries K;
  TSeries X;
  TSeries Y;
  TSeries Z;
};

Coefficients kernel_eval(const KernelSystem& sys, const TSeries& a, const TSeries& b);
Coefficients kernel_eval(const KernelSystem& sys, const Rational& a, const Rational& b);

enum class Branch { beta_minus, beta_plus, alpha_minus, alpha_plus };

std::string to_string(Branch branch);

/// A kernel root: K(arg, beta(arg)) = 0 or K(alpha(arg), arg) = 0.
struct RootSeries {
  Branch which;
  TSeries argument;
  TSeries expansion;
};

/// Raised when neither sign of the square root yields the requested branch.
class BranchError : public exact::SeriesError {
 public:
  using exact::SeriesError::SeriesError;
};

/// Root with a series argument, known at least through t^order (p = 1 only).
/// The minus branches raise the valuation of the argument by one, the plus branches lower it.
TSeries root_of(const KernelSystem& sys, Branch which, const TSeries& arg, int order);
RootSeries root(const KernelSystem& sys, Branch which, const Rational& arg, int order);

/// Runs `compute(working_order)` with growing working orders until the result is known
/// through t^order, then truncates it there.
TSeries at_order(int order, const std::function<TSeries(int)>& compute);

inline constexpr int kMaxCompositionDepth = 6;

/// beta_n two ways: closed form from beta_1 and a, and repeated substitution of beta_{+-1}.
struct IteratedRoot {
  int n = 0;
  TSeries closed_form;
  TSeries composed_form;
};

/// Closed form 1/beta_n = t^{1-n} G(n)/beta_1 - t^{2-n} G(n-1)/a with G(m) = (1-t^{2m})/(1-t^2).
TSeries beta_closed(int n, const TSeries& beta1, const TSeries& a);
/// Symmetric model (p = 1). Composition is limited to |n| <= kMaxCompositionDepth.
IteratedRoot beta_iterate(int n, const Rational& a, int order);
/// beta_1 composed n times (n > 0) or beta_{-1} composed -n times (n < 0), truncated at order.
TSeries beta_composed(int n, const TSeries& a, int order);

/// gamma_n = (alpha_1 o beta_1)^n (asymmetric model, p = 1) and beta_1(gamma_n).
struct GammaIterate {
  int n = 0;
  TSeries gamma_closed;
  TSeries gamma_composed;
  TSeries beta_gamma_closed;
  TSeries beta_gamma_composed;
};
GammaIterate gamma_iterate(int n, const Rational& a, int order);

/// Outcome of an identity check, suitable for verdict records.
struct IdentityCheck {
  std::string identity;
  std::string parameters;
  int order = 0;
  std::optional<int> first_bad_coefficient;

  bool holds() const { return !first_bad_coefficient.has_value(); }
};

IdentityCheck compare(std::string identity, std::string parameters, const TSeries& lhs, const TSeries& rhs,
                      int order);

/// beta_{-n}(beta_n(a)) = a both ways, beta_{-1}(beta_1(a)) = a and the three-term recurrence at n.
std::vector<IdentityCheck> group_law_check(int n, const Rational& a, int order);

enum class QKind { q_sym, q_asym, qbar_asym, p_asym };

std::string to_string(QKind kind);

/// Q_sym(a) = 1/(t a^2) - 1/(a beta_1) - t, Q(a) = 1/a - t/beta_1 - t,
/// Qbar(a) = 1/beta_1 - t/a - t^2, P(b) = Q(alpha_1(b)); all from the defining root formulas.
TSeries qpq_series(QKind kind, const Rational& arg, int order);
/// Same, with a series argument (used for compositions).
TSeries qpq_series(QKind kind, const TSeries& arg, int order);

/// LHS - RHS of the defining functional equation with the DP series substituted.
/// Requires weighted.order() >= order.
TSeries residual_functional_eq(const KernelSystem& sys, const enumerate::WeightedSeries& weighted,
                               const Rational& a, const Rational& b, int order);
/// Convenience overload that enumerates the weighted series itself.
TSeries residual_functional_eq(const KernelSystem& sys, const Rational& a, const Rational& b, int order);
/// K f - X - Y f(a,ta) - Z f(tb,b) for the same DP series.
TSeries residual_kernel_form(const KernelSystem& sys, const enumerate::WeightedSeries& weighted,
                             const Rational& a, const Rational& b, int order);

/// The asymmetric iteration coefficients at index n, raw and simplified.
struct ScriptCoefficients {
  int n = 0;
  TSeries X, Y, Z, A, B, C;          ///< raw, from the kernel coefficients at composed roots
  TSeries B_simplified, C_simplified;
  std::vector<IdentityCheck> checks;  ///< raw vs simplified plus the auxiliary identities
};
ScriptCoefficients script_coeffs(int n, const Rational& a, int order);

}  // namespace wedge::kernel
