#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace isum {

using RealFn = std::function<double(double)>;

// Gregory coefficients G_n (Bernoulli numbers of the second kind),
// computed exactly in rational arithmetic and cached.
double gregory_coeff(int n);
// Tail 1 - sum_{j=1}^n |G_j|, exact before rounding.
double gregory_tail(int n);
// Bernoulli numbers with B_1 = -1/2.
double bernoulli_number(int n);
double bernoulli_poly(int n, double x);

// Generalized binomial coefficient C(x, j) = x(x-1)...(x-j+1)/j!.
double gen_binomial(double x, int j);

struct Difference {
  double value = 0;
  double rounding = 0;  // estimate of the cancellation error
  bool cancellation_warning = false;
};

// Delta^j f(x) by the alternating binomial sum with compensated summation.
Difference forward_difference_ex(const RealFn& f, int j, double x, double h = 1.0);
double forward_difference(const RealFn& f, int j, double x, double h = 1.0);
// Delta^0..Delta^{len-1} at the first node from equally spaced samples.
std::vector<double> difference_table(const std::vector<double>& values);

struct NodeSet {
  std::vector<double> nodes;
  std::vector<double> values;
  static NodeSet sample(const RealFn& f, std::vector<double> nodes);
};

double divided_difference(const NodeSet& f);
std::vector<double> newton_coefficients(const NodeSet& f);
double newton_interpolate(const NodeSet& f, double x);

struct IntegralResult {
  double value = 0;
  double error = 0;
  int evaluations = 0;
  int intervals = 0;
};

// Globally adaptive Gauss-Kronrod (7/15) quadrature on [a, b].
// Throws IntegrationError (with best estimate) when tol is not met.
IntegralResult integrate_ex(const RealFn& f, double a, double b, double tol,
                            int max_intervals = 4000);
double integrate(const RealFn& f, double a, double b, double tol);

// A value with an absolute error estimate.
struct Estimate {
  double value = 0;
  double error = 0;
};

// Neumaier compensated accumulator.
class CompensatedSum {
 public:
  void add(double v) {
    double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0;
  double comp_ = 0;
};

}  // namespace isum
