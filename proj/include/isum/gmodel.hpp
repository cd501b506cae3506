#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "isum/numerics.hpp"

namespace isum {

enum class DomainExtension { positive_only, punctured_reals };

// g together with the metadata the engine needs: asymptotic degree p,
// the abscissa from which g is p-convex or p-concave, and optional
// analytic derivatives.
struct AdmissibleFunction {
  std::string name;
  RealFn eval;
  // (x, r) -> g^{(r)}(x) for r >= 1; empty means finite differences.
  std::function<double(double, int)> deriv;
  int degree_p = -1;  // -1: resolve with estimate_degree
  double convexity_onset = 1.0;
  int convexity_sign = 0;  // +1: K^p_+, -1: K^p_-, 0: undeclared
  // Signs alternate for every order q >= p on [convexity_onset, inf).
  // Lets the engine raise the working order when that tightens bounds.
  bool alternating = false;
  bool summable = false;
  DomainExtension extension = DomainExtension::positive_only;
  int max_analytic_order = 0;  // highest r the deriv callable supports; 0 = unlimited if deriv set

  double operator()(double x) const { return eval(x); }
  int p() const;
  bool has_analytic_derivative(int r) const;
  double derivative(double x, int r) const;
  // Sign of q-convexity on [convexity_onset, inf), 0 when unknown.
  int sign_at(int q) const;
  // Largest q in [p, p+boost] such that every order up to q has a known sign.
  int boosted_order(int boost) const;
};

AdmissibleFunction make_function(std::string name, RealFn eval, int degree_p, int sign = 0,
                                 double onset = 1.0, bool alternating = false);

// g^{(r)} packaged as an admissible function of degree (p - r)_+.
AdmissibleFunction derivative_function(const AdmissibleFunction& g, int r);
// x -> g(c x).
AdmissibleFunction scaled(const AdmissibleFunction& g, double c);
// x -> g(x + a).
AdmissibleFunction shifted(const AdmissibleFunction& g, double a);
// x -> c g(x).
AdmissibleFunction multiplied(const AdmissibleFunction& g, double c);

// Central finite difference for g^{(r)}(x) with the balanced step.
double numeric_derivative(const RealFn& f, double x, int r, double lower_limit = 0.0);

// Smallest q with Delta^q g(n) -> 0 along n = 2^4..n_max; nullopt if none up to 12.
std::optional<int> estimate_degree(const AdmissibleFunction& g, std::int64_t n_max = 1 << 14);
AdmissibleFunction resolve_degree(AdmissibleFunction g, std::int64_t n_max = 1 << 14);

struct RatioDiagnostic {
  double max_ratio = 0;
  bool flagged = false;
  bool eventually_zero = false;
};
RatioDiagnostic ratio_test_diagnostic(const AdmissibleFunction& g, std::int64_t n_max = 1 << 16);

struct ConvexityReport {
  int sign = 0;  // +1, -1, or 0 on violation
  bool violation = false;
  std::vector<double> witness;  // nodes of a violating divided difference
};
ConvexityReport convexity_probe(const AdmissibleFunction& g, int p, double x_lo, double x_hi,
                                int samples = 200, std::uint64_t seed = 12345);

// Informational only: x * Delta g(x) / g(x).
double elasticity_diagnostic(const AdmissibleFunction& g, double x);

}  // namespace isum
