#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isum/gmodel.hpp"
#include "isum/sigma.hpp"

namespace isum {

enum class SigmaMethod {
  raabe_integral,
  stirling_limit,
  gregory_series,
  euler_maclaurin,
  liu_integral,
  summable_split,
};

const char* to_string(SigmaMethod m);
// Accepts the enum spelling or the short forms raabe, stirling, gregory, em, liu, summable.
SigmaMethod parse_sigma_method(const std::string& s);

struct ConstantEstimate {
  double value = 0;
  double error_estimate = 0;
  SigmaMethod method = SigmaMethod::raabe_integral;
  int iterations = 0;  // points, terms or quadrature evaluations, depending on the method
};

// sigma[g] = int_1^2 Sigma g.
ConstantEstimate sigma_constant(const AdmissibleFunction& g, SigmaMethod method, double tol);
std::vector<SigmaMethod> applicable_methods(const AdmissibleFunction& g);
// Partial sums sum_{n=1}^{N} G_n Delta^{n-1} g(1), N = 1..terms.
std::vector<double> gregory_series_partial(const AdmissibleFunction& g, int terms);

// gamma[g] = sigma[g] - sum_{j=1}^p G_j Delta^{j-1} g(1).
ConstantEstimate euler_constant(const AdmissibleFunction& g, double tol,
                                SigmaMethod method = SigmaMethod::raabe_integral);
// gamma[g] as sum_{k>=1} J^{p+1}[g](k), truncated with the Stirling-type bound.
Estimate euler_constant_integral(const AdmissibleFunction& g, double tol, int max_terms = 4096);
// sigma[g] - int_0^1 g; empty when g is not integrable at 0.
std::optional<ConstantEstimate> sigma_bar(const AdmissibleFunction& g, double tol);

// J^q[g](x) = sum_{j<q} G_j Delta^j g(x) - int_x^{x+1} g.
double binet_J(const AdmissibleFunction& g, int q, double x, double tol = 1e-13);
// int_1^x g (negative orientation when x < 1).
double integral_from_one(const AdmissibleFunction& g, double x, double tol);

// Sigma g(x) - sigma[g] - int_1^x g + sum_{j=1}^p G_j Delta^{j-1} g(x) = J^{p+1}[Sigma g](x).
Estimate stirling_residual(const AdmissibleFunction& g, double x, double tol);
// Sigma g(x) - sigma[g] - int_1^{x-1/2} g, for p <= 1.
Estimate burnside_residual(const AdmissibleFunction& g, double x, double tol);

struct Expansion {
  double value = 0;
  double remainder_bound = 0;
};
// Trend plus Bernoulli corrections for (1/m) sum_{j<m} Sigma g(x + j/m).
Expansion asymptotic_expansion(const AdmissibleFunction& g, int q, int m, double x, double tol);
// The left-hand side of the m-averaged expansion, from sigma_eval.
Estimate averaged_sum(const AdmissibleFunction& g, int m, double x, double tol);

struct LiuResult {
  double value = 0;
  double error = 0;
  double tail_integral = 0;  // the oscillatory integral term
};
// Sigma g(x) through the periodic-Bernoulli integral representation.
LiuResult liu_eval(const AdmissibleFunction& g, int q, double x, double tol);

struct BoundPair {
  double lower = 0;
  double upper = 0;
  std::string target;
  bool certified = true;

  double width() const { return upper - lower; }
  bool contains(double v) const { return lower <= v && v <= upper; }
  bool strictly_inside(const BoundPair& o) const { return o.lower < lower && upper < o.upper; }
};

// Bracket on rho_x^{p+1}[Sigma g](a) = Sigma g(x+a) - Sigma g(x) - sum_{j=1}^p C(a,j) Delta^{j-1} g(x).
BoundPair wendel_bounds(const AdmissibleFunction& g, double x, double a);
// |J^{p+1}[Sigma g](x)| <= Gbar_p |Delta^p g(x)|.
BoundPair stirling_bounds(const AdmissibleFunction& g, double x);
// Refined bracket of order r on J^{p+1}[Sigma g](x); r = 0 is stirling_bounds.
BoundPair bracket_refine(const AdmissibleFunction& g, int r, double x);
// Integrated (Webster-type) bracket on J^{p+1}[Sigma g](x).
BoundPair webster_bounds(const AdmissibleFunction& g, double x, int p = -1);
double webster_A(const AdmissibleFunction& g, int p, double x);
double webster_B(const AdmissibleFunction& g, int p, double x);

}  // namespace isum
