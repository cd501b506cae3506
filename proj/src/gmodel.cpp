#include "isum/gmodel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "isum/errors.hpp"

namespace isum {

int AdmissibleFunction::p() const {
  if (degree_p < 0) throw DomainError("asymptotic degree of '" + name + "' is unresolved");
  return degree_p;
}

bool AdmissibleFunction::has_analytic_derivative(int r) const {
  return static_cast<bool>(deriv) && (max_analytic_order == 0 || r <= max_analytic_order);
}

double AdmissibleFunction::derivative(double x, int r) const {
  if (r == 0) return eval(x);
  if (has_analytic_derivative(r)) return deriv(x, r);
  double lower = extension == DomainExtension::positive_only ? 0.0 : -std::numeric_limits<double>::infinity();
  return numeric_derivative(eval, x, r, lower);
}

int AdmissibleFunction::sign_at(int q) const {
  if (degree_p < 0 || q < degree_p || convexity_sign == 0) return 0;
  if (q == degree_p) return convexity_sign;
  if (!alternating) return 0;
  return ((q - degree_p) % 2) ? -convexity_sign : convexity_sign;
}

int AdmissibleFunction::boosted_order(int boost) const {
  int base = p();
  int q = base;
  while (q < base + boost && sign_at(q + 1) != 0) ++q;
  return q;
}

AdmissibleFunction make_function(std::string name, RealFn eval, int degree_p, int sign, double onset,
                                 bool alternating) {
  AdmissibleFunction g;
  g.name = std::move(name);
  g.eval = std::move(eval);
  g.degree_p = degree_p;
  g.convexity_sign = sign;
  g.convexity_onset = onset;
  g.alternating = alternating;
  return g;
}

AdmissibleFunction derivative_function(const AdmissibleFunction& g, int r) {
  if (r < 0) throw DomainError("derivative_function: negative order");
  if (r == 0) return g;
  AdmissibleFunction h;
  h.name = g.name + "^(" + std::to_string(r) + ")";
  h.eval = [g, r](double x) { return g.derivative(x, r); };
  if (g.deriv) {
    h.deriv = [g, r](double x, int k) { return g.derivative(x, r + k); };
    if (g.max_analytic_order > 0) h.max_analytic_order = std::max(0, g.max_analytic_order - r);
    if (g.max_analytic_order > 0 && g.max_analytic_order < r) h.deriv = nullptr;
  }
  int p = g.p();
  h.degree_p = std::max(p - r, 0);
  h.convexity_sign = g.sign_at(h.degree_p + r);
  h.convexity_onset = g.convexity_onset;
  h.alternating = g.alternating;
  h.summable = r > p;
  h.extension = g.extension;
  return h;
}

AdmissibleFunction scaled(const AdmissibleFunction& g, double c) {
  if (!(c > 0)) throw DomainError("scaled: factor must be positive");
  AdmissibleFunction h = g;
  h.name = g.name + "(" + std::to_string(c) + "x)";
  h.eval = [g, c](double x) { return g.eval(c * x); };
  if (g.deriv) h.deriv = [g, c](double x, int r) { return std::pow(c, r) * g.deriv(c * x, r); };
  h.convexity_onset = g.convexity_onset / c;
  return h;
}

AdmissibleFunction shifted(const AdmissibleFunction& g, double a) {
  AdmissibleFunction h = g;
  h.name = g.name + "(x+" + std::to_string(a) + ")";
  h.eval = [g, a](double x) { return g.eval(x + a); };
  if (g.deriv) h.deriv = [g, a](double x, int r) { return g.deriv(x + a, r); };
  h.convexity_onset = std::max(1.0, g.convexity_onset - a);
  return h;
}

AdmissibleFunction multiplied(const AdmissibleFunction& g, double c) {
  AdmissibleFunction h = g;
  h.name = std::to_string(c) + "*" + g.name;
  h.eval = [g, c](double x) { return c * g.eval(x); };
  if (g.deriv) h.deriv = [g, c](double x, int r) { return c * g.deriv(x, r); };
  if (c < 0) h.convexity_sign = -g.convexity_sign;
  if (c == 0) h.convexity_sign = 0;
  return h;
}

double numeric_derivative(const RealFn& f, double x, int r, double lower_limit) {
  if (r == 0) return f(x);
  const double eps = std::numeric_limits<double>::epsilon();
  double h = std::pow(eps, 1.0 / (r + 2)) * std::max(1.0, std::abs(x));
  while (x - 0.5 * r * h <= lower_limit && h > 1e-300) h *= 0.5;
  CompensatedSum s;
  double binom = 1;
  for (int k = 0; k <= r; ++k) {
    double t = binom * f(x + (0.5 * r - k) * h);
    s.add((k % 2) ? -t : t);
    binom = binom * (r - k) / (k + 1);
  }
  return s.value() / std::pow(h, r);
}

std::optional<int> estimate_degree(const AdmissibleFunction& g, std::int64_t n_max) {
  const double eps = std::numeric_limits<double>::epsilon();
  std::vector<double> ladder;
  for (std::int64_t n = 16; n <= n_max; n *= 2) ladder.push_back(static_cast<double>(n));
  if (ladder.size() < 6) throw DomainError("estimate_degree: n_max must be at least 512");
  for (int q = 0; q <= 12; ++q) {
    std::vector<double> mags;
    bool numerically_zero = true;
    for (double n : ladder) {
      // Overflow along the ladder means growth faster than any polynomial.
      if (!std::isfinite(g.eval(n + q))) return std::nullopt;
      Difference d = forward_difference_ex(g.eval, q, n);
      double scale = 1 + std::abs(g.eval(n));
      mags.push_back(std::abs(d.value));
      if (std::abs(d.value) > 1e3 * eps * std::max(scale, d.rounding / eps)) numerically_zero = false;
    }
    if (numerically_zero) return q;
    bool decreasing = true;
    for (std::size_t i = mags.size() - 5; i < mags.size(); ++i)
      if (!(mags[i] <= 0.99 * mags[i - 1])) decreasing = false;
    if (decreasing || mags.back() <= 1e-12 * (1 + std::abs(g.eval(ladder.back())))) return q;
  }
  return std::nullopt;
}

AdmissibleFunction resolve_degree(AdmissibleFunction g, std::int64_t n_max) {
  if (g.degree_p >= 0) return g;
  auto q = estimate_degree(g, n_max);
  if (!q) throw RefusedError("'" + g.name + "' has no finite asymptotic degree up to 12");
  g.degree_p = *q;
  return g;
}

RatioDiagnostic ratio_test_diagnostic(const AdmissibleFunction& g, std::int64_t n_max) {
  RatioDiagnostic out;
  std::vector<double> ratios;
  bool all_zero = true;
  for (std::int64_t n = 16; n <= n_max; n *= 2) {
    double a = g.eval(static_cast<double>(n)), b = g.eval(static_cast<double>(n + 1));
    if (!std::isfinite(a) || !std::isfinite(b)) break;
    if (a == 0) continue;
    all_zero = false;
    ratios.push_back(b / a);
  }
  if (all_zero || ratios.empty()) {
    out.eventually_zero = true;
    return out;
  }
  std::size_t from = ratios.size() > 4 ? ratios.size() - 4 : 0;
  out.max_ratio = *std::max_element(ratios.begin() + from, ratios.end());
  out.flagged = out.max_ratio > 1 + 1e-3;
  return out;
}

ConvexityReport convexity_probe(const AdmissibleFunction& g, int p, double x_lo, double x_hi, int samples,
                                std::uint64_t seed) {
  if (!(x_lo < x_hi)) throw DomainError("convexity_probe: empty interval");
  if (p < 0) throw DomainError("convexity_probe: negative order");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(x_lo, x_hi);
  const double eps = std::numeric_limits<double>::epsilon();
  const double min_gap = (x_hi - x_lo) / (50.0 * (p + 2));
  ConvexityReport rep;
  bool pos = false, neg = false;
  std::vector<double> pos_w, neg_w;
  for (int s = 0; s < samples; ++s) {
    std::vector<double> pts(p + 2);
    double gap;
    do {
      for (auto& t : pts) t = u(rng);
      std::sort(pts.begin(), pts.end());
      gap = std::numeric_limits<double>::infinity();
      for (int i = 1; i < p + 2; ++i) gap = std::min(gap, pts[i] - pts[i - 1]);
    } while (gap < min_gap);
    NodeSet ns = NodeSet::sample(g.eval, pts);
    double vmax = 0;
    for (double v : ns.values) vmax = std::max(vmax, std::abs(v));
    double dd = divided_difference(ns);
    double noise = 1e3 * eps * vmax / std::pow(gap, p + 1);
    if (dd > noise && !pos) {
      pos = true;
      pos_w = pts;
    }
    if (dd < -noise && !neg) {
      neg = true;
      neg_w = pts;
    }
  }
  if (pos && neg) {
    rep.violation = true;
    rep.witness = neg_w;
    rep.witness.insert(rep.witness.end(), pos_w.begin(), pos_w.end());
    return rep;
  }
  rep.sign = neg ? -1 : +1;
  return rep;
}

double elasticity_diagnostic(const AdmissibleFunction& g, double x) {
  double gx = g.eval(x);
  if (gx == 0) throw DomainError("elasticity_diagnostic: g(x) = 0");
  return x * (g.eval(x + 1) - gx) / gx;
}

}  // namespace isum
