#include "isum/gregquad.hpp"

#include <algorithm>
#include <cmath>

#include "isum/errors.hpp"

namespace isum {

namespace {

// Differences Delta^j at x for j = 0..q, from one table of q+1 samples.
std::vector<double> diffs_at(const RealFn& f, double x, double h, int q) {
  std::vector<double> v(q + 1);
  for (int i = 0; i <= q; ++i) v[i] = f(x + i * h);
  return difference_table(v);
}

QuadratureResult gregory_core(const RealFn& f, double a, double h, std::int64_t n, int q) {
  if (q < 0) throw DomainError("gregory: q must be nonnegative");
  if (n < 0) throw DomainError("gregory: n must be nonnegative");
  QuadratureResult r;
  r.q_used = q;
  CompensatedSum s;
  for (std::int64_t k = 0; k < n; ++k) s.add(f(a + static_cast<double>(k) * h));
  std::vector<double> dm = diffs_at(f, a, h, q), dn = diffs_at(f, a + static_cast<double>(n) * h, h, q);
  for (int j = 1; j <= q; ++j) {
    double c = gregory_coeff(j) * (dn[j - 1] - dm[j - 1]);
    r.corrections.push_back(c);
    s.add(c);
  }
  r.value = s.value();
  r.remainder_bound = gregory_tail(q) * std::abs(dn[q] - dm[q]);
  return r;
}

}  // namespace

QuadratureResult gregory_sum(const AdmissibleFunction& g, std::int64_t m, std::int64_t n, int q) {
  if (m < 1 || n < m) throw DomainError("gregory_sum: need 1 <= m <= n");
  QuadratureResult r = gregory_core(g.eval, static_cast<double>(m), 1.0, n - m, q);
  if (g.sign_at(q) == 0 || m < g.convexity_onset) {
    double hi = static_cast<double>(n + q) + 8.0;
    r.certified = !convexity_probe(g, q, static_cast<double>(m), hi).violation;
  }
  return r;
}

QuadratureResult gregory_sum_general(const RealFn& f, double a, double h, std::int64_t n, int q) {
  if (!(h > 0)) throw DomainError("gregory_sum_general: h must be positive");
  QuadratureResult r = gregory_core(f, a, h, n, q);
  // Certify when Delta_h^{q+1} f keeps one sign over the nodes.
  std::vector<double> v(n + q + 2);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(a + static_cast<double>(i) * h);
  for (int j = 0; j <= q; ++j)
    for (std::size_t i = 0; i + 1 < v.size() - j; ++i) v[i] = v[i + 1] - v[i];
  int pos = 0, neg = 0;
  for (std::size_t i = 0; i + q + 1 < v.size(); ++i) {
    if (v[i] > 0) ++pos;
    if (v[i] < 0) ++neg;
  }
  r.certified = pos == 0 || neg == 0;
  return r;
}

int gregory_auto_order(const AdmissibleFunction& g, std::int64_t m, std::int64_t n, int q_max) {
  std::vector<double> dm = diffs_at(g.eval, static_cast<double>(m), 1.0, q_max + 1);
  std::vector<double> dn = diffs_at(g.eval, static_cast<double>(n), 1.0, q_max + 1);
  int q = 0;
  double last = std::abs(gregory_coeff(1) * (dn[0] - dm[0]));
  while (q < q_max) {
    double next = std::abs(gregory_coeff(q + 2) * (dn[q + 1] - dm[q + 1]));
    ++q;
    if (next >= last) break;
    last = next;
  }
  return q;
}

double piecewise_interpolant(const AdmissibleFunction& g, int q, double x) {
  if (x < 1) throw DomainError("piecewise_interpolant: x must be at least 1");
  double k = std::floor(x), t = x - k;
  std::vector<double> d = diffs_at(g.eval, k, 1.0, q);
  CompensatedSum s;
  for (int j = 0; j <= q; ++j) s.add(gen_binomial(t, j) * d[j]);
  return s.value();
}

QuadratureResult euler_maclaurin_sum(const AdmissibleFunction& f, double a, double b, std::int64_t N, int q) {
  if (N < 1 || !(b > a)) throw DomainError("euler_maclaurin_sum: need N >= 1 and b > a");
  if (q < 0) throw DomainError("euler_maclaurin_sum: q must be nonnegative");
  const int order = std::max(2, 2 * q);
  if (!f.has_analytic_derivative(order) && order > 3)
    throw DomainError("euler_maclaurin_sum: derivative of order " + std::to_string(order) + " unavailable");
  const double h = (b - a) / static_cast<double>(N);
  QuadratureResult r;
  r.q_used = q;
  CompensatedSum s;
  s.add(0.5 * (f.eval(a) + f.eval(b)));
  for (std::int64_t k = 1; k < N; ++k) s.add(f.eval(a + static_cast<double>(k) * h));
  double trap = h * s.value();
  CompensatedSum v;
  v.add(trap);
  for (int k = 1; k <= q; ++k) {
    double c = bernoulli_number(2 * k) * std::pow(h, 2 * k) / std::tgamma(2 * k + 1.0) *
               (f.derivative(b, 2 * k - 1) - f.derivative(a, 2 * k - 1));
    r.corrections.push_back(-c);
    v.add(-c);
  }
  r.value = v.value();
  // Remainder kernel bounds: |B_{2q}|/(2q)! for q >= 1, 1/8 for the bare trapezoid.
  double kmax = q == 0 ? 0.125 : std::abs(bernoulli_number(2 * q)) / std::tgamma(2 * q + 1.0);
  auto absder = [&](double t) { return std::abs(f.derivative(t, order)); };
  IntegralResult ir;
  try {
    ir = integrate_ex(absder, a, b, 1e-8 * (1 + std::abs(trap)), 4000);
  } catch (const IntegrationError& e) {
    ir.value = std::abs(e.best_estimate()) + e.error_estimate();
  }
  r.remainder_bound = std::pow(h, order) * kmax * ir.value;
  return r;
}

double gregory_kernel(int q, std::int64_t m, std::int64_t n, double t) {
  auto u = [&](double x) { return x > t ? std::pow(x - t, q) : 0.0; };
  auto up = [&](double x) { return x > t ? std::pow(x - t, q + 1) : 0.0; };
  double exact = (up(static_cast<double>(n)) - up(static_cast<double>(m))) / (q + 1);
  QuadratureResult r = gregory_core(u, static_cast<double>(m), 1.0, n - m, q);
  return (exact - r.value) / std::tgamma(q + 1.0);
}

KernelSign gregory_kernel_sign(int q, std::int64_t m, std::int64_t n, int samples) {
  KernelSign ks{0, INFINITY, -INFINITY};
  const double lo = static_cast<double>(m), hi = static_cast<double>(n + q);
  for (int i = 0; i < samples; ++i) {
    double t = lo + (hi - lo) * (i + 0.5) / samples;
    double k = gregory_kernel(q, m, n, t);
    ks.min = std::min(ks.min, k);
    ks.max = std::max(ks.max, k);
  }
  double tiny = 1e-12 * std::max(std::abs(ks.min), std::abs(ks.max));
  if (ks.min >= -tiny) ks.sign = 1;
  else if (ks.max <= tiny) ks.sign = -1;
  return ks;
}

}  // namespace isum
