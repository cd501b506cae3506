#pragma once

#include <cstdint>
#include <string>

#include "isum/gmodel.hpp"

namespace isum {

enum class BoundKind {
  wendel_coarse,    // ceil(x) |C(x-1,q)| |Delta^q g(n)|
  wendel_tight,     // |C(x-1,q)| |Delta^{q-1} g(n+x) - Delta^{q-1} g(n)|
  summable_tail,    // ceil(x) |g(n)| for a summable g
  asymptotic_tail,  // first omitted Euler-Maclaurin term
  uncertified,
};

const char* to_string(BoundKind k);

struct SigmaResult {
  double value = 0;
  double error_bound = 0;
  std::int64_t n_used = 0;
  int p_used = 0;
  BoundKind bound_kind = BoundKind::wendel_tight;

  bool certified() const { return bound_kind != BoundKind::uncertified; }
};

// Truncation cap for the Gauss-limit sequence. SIGMA_CACHE_N overrides 2^24.
std::int64_t default_n_cap();

struct SigmaOptions {
  std::int64_t n_cap = default_n_cap();
  // Extra orders tried above p when the convexity signs alternate.
  int max_boost = 4;
  // Arguments above this are shifted into (1, 2] first.
  double reduce_above = 2.0;
};

// rho_a^p[g](x) = g(x+a) - sum_{j<p} C(x,j) Delta^j g(a).
double rho(const AdmissibleFunction& g, int p, double a, double x);
// f_n^p[g](x), the n-th term of the Gauss-limit sequence.
double f_np(const AdmissibleFunction& g, int p, std::int64_t n, double x);

// Sigma g(x) for x > 0 with a truncation bound from the existence theorem.
SigmaResult sigma_eval(const AdmissibleFunction& g, double x, double tol, const SigmaOptions& opt = {});
// Summable case: sum_{k>=1} g(k) - sum_{k>=0} g(x+k).
SigmaResult sigma_eval_summable(const AdmissibleFunction& g, double x, double tol,
                                const SigmaOptions& opt = {});
// sum_{k=1}^{n-1} g(k).
double sigma_at_integers(const AdmissibleFunction& g, std::int64_t n);
// Sigma g on R minus the nonpositive integers, through f(x-m) = f(x) - sum g(x-k).
SigmaResult sigma_extend(const AdmissibleFunction& g, double x, double tol, const SigmaOptions& opt = {});
// (Sigma g)^{(r)}(x) = Sigma g^{(r)}(x) + g^{(r-1)}(1) - sigma[g^{(r)}].
SigmaResult sigma_derivative(const AdmissibleFunction& g, int r, double x, double tol);

}  // namespace isum
