#pragma once

#include <vector>

#include "isum/asym.hpp"
#include "isum/gmodel.hpp"
#include "isum/sigma.hpp"

namespace isum {

// sum_{j=0}^{m-1} Sigma g((x+j)/m).
Estimate multiplication_lhs(const AdmissibleFunction& g, int m, double x, double tol);
// sum_{j=1}^m Sigma g(j/m) = m sigma[g] - sigma[g_m] - m int_{1/m}^1 g, with g_m(x) = g(x/m).
Estimate multiplication_constant(const AdmissibleFunction& g, int m, double tol);
// Right-hand side of the multiplication formula: constant + Sigma g_m(x).
Estimate multiplication_rhs(const AdmissibleFunction& g, int m, double x, double tol);

// sum_{j=0}^{m-1} f(x + a j) = h(x).
struct WebsterProblem {
  AdmissibleFunction h;
  int m = 2;
  double a = 1;
};
struct WebsterSolution {
  double value = 0;
  double error = 0;
  double residual = 0;  // sum_j f(x + a j) - h(x), recomputed
};
WebsterSolution webster_solve(const WebsterProblem& P, double x, double tol);

enum class WallisVariant { shift0, shift1, scale2 };
const char* to_string(WallisVariant v);
WallisVariant parse_wallis_variant(const std::string& s);
// h(n) + sum_{k=1}^{2n} (-1)^{k-1} g(k) for n = 1..N; tends to 0.
std::vector<double> wallis_limit(const AdmissibleFunction& g, WallisVariant variant, int N, double tol = 1e-10);

enum class Parity { odd, even };
// omega_{-}[g] (odd g) or omega_{+}[g] (even g) at x by the symmetric limit.
Estimate reflection_periodic(const AdmissibleFunction& g, Parity parity, double x, double tol);

// Sigma g(a/b) through the root-of-unity filtered series, truncated after at most K terms.
Estimate rational_argument(const AdmissibleFunction& g, int a, int b, std::int64_t K, double tol = 1e-10);

struct GautschiResult {
  BoundPair bounds;  // target: Sigma g(x+a) - Sigma g(x+ceil a)
  double middle = 0;  // (a - ceil a) (Sigma g)'(x + ceil a)
  double target = 0;
  bool concave = false;
};
GautschiResult gautschi_bounds(const AdmissibleFunction& g, double x, double a, double tol = 1e-10);

struct ElevatorResult {
  double value = 0;
  double error = 0;
  double defect = 0;          // int_a^{a+1} phi - g^{(r-1)}(a)
  double shift_constant = 0;  // g^{(r-1)}(1) - sigma[g^{(r)}]
};
ElevatorResult elevator(const AdmissibleFunction& g, int r, double a, double x, double tol);

struct SeriesResult {
  double value = 0;
  double last_term = 0;
  int terms = 0;
};
// sigma[g] = sum_{k>=1} (Sigma g)^{(k)}(1) / (k+1)!.
SeriesResult euler_series_analogue(const AdmissibleFunction& g, int K, double tol = 1e-12);

}  // namespace isum
