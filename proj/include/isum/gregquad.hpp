#pragma once

#include <cstdint>
#include <vector>

#include "isum/gmodel.hpp"

namespace isum {

struct QuadratureResult {
  double value = 0;
  double remainder_bound = 0;
  int q_used = 0;
  std::vector<double> corrections;  // G_j (Delta^{j-1} g(n) - Delta^{j-1} g(m)), j = 1..q
  bool certified = true;
};

// Gregory's formula for int_m^n g: left sum plus q difference corrections.
QuadratureResult gregory_sum(const AdmissibleFunction& g, std::int64_t m, std::int64_t n, int q);
// Same with step h: approximates (1/h) int_a^{a+nh} f.
QuadratureResult gregory_sum_general(const RealFn& f, double a, double h, std::int64_t n, int q);
// Increase q while the next correction shrinks; stop at the first growth.
int gregory_auto_order(const AdmissibleFunction& g, std::int64_t m, std::int64_t n, int q_max = 30);

// sum_{j=0}^q C({x}, j) Delta^j g(floor x).
double piecewise_interpolant(const AdmissibleFunction& g, int q, double x);

// Composite trapezoid on N panels with q Bernoulli corrections.
// Needs derivatives of f up to order 2q.
QuadratureResult euler_maclaurin_sum(const AdmissibleFunction& f, double a, double b, std::int64_t N, int q);

// Peano kernel of the Gregory remainder at t; the remainder is int_m^{n+q} K(t) g^{(q+1)}(t) dt.
double gregory_kernel(int q, std::int64_t m, std::int64_t n, double t);
struct KernelSign {
  int sign = 0;  // +1 or -1 when constant on the samples, 0 otherwise
  double min = 0;
  double max = 0;
};
KernelSign gregory_kernel_sign(int q, std::int64_t m, std::int64_t n, int samples = 400);

}  // namespace isum
