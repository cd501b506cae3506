#include "isum/asym.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "isum/errors.hpp"

namespace isum {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInf = std::numeric_limits<double>::infinity();

AdmissibleFunction resolved(const AdmissibleFunction& g) {
  return g.degree_p >= 0 ? g : resolve_degree(g);
}

double factorial(int n) { return std::tgamma(n + 1.0); }

// Highest derivative order we trust: analytic ones freely, finite differences up to 3.
int usable_order(const AdmissibleFunction& g, int want) {
  int r = 0;
  while (r < want && (g.has_analytic_derivative(r + 1) || r + 1 <= 3)) ++r;
  return r;
}

// Integral over [a, b] with the tolerance floored at the quadrature's rounding level.
IntegralResult floored_integral(const RealFn& f, double a, double b, double tol) {
  double rough = (b - a) * std::max({std::abs(f(a)), std::abs(f(0.5 * (a + b))), std::abs(f(b))});
  return integrate_ex(f, a, b, std::max(tol, 128 * kEps * rough), 20000);
}

IntegralResult chunk_integral(const AdmissibleFunction& g, double a, double b, double tol) {
  return floored_integral(g.eval, a, b, tol);
}

// Sum_{k=a}^{b-1} g(k) into an accumulator.
void add_range(const AdmissibleFunction& g, std::int64_t a, std::int64_t b, CompensatedSum& s, double& mag) {
  for (std::int64_t k = a; k < b; ++k) {
    double v = g.eval(static_cast<double>(k));
    s.add(v);
    mag += std::abs(v);
  }
}

// Gregory corrections sum_{j=1}^q G_j Delta^{j-1} g(n) for every q up to qmax,
// plus |Delta^q g(n)| and a rounding level per q.
struct DiffData {
  std::vector<double> partial;  // partial[q] = sum_{j=1}^q G_j Delta^{j-1} g(n)
  std::vector<double> delta;    // delta[q] = Delta^q g(n)
  double scale = 0;
};

DiffData diff_data(const AdmissibleFunction& g, double n, int qmax) {
  std::vector<double> v(qmax + 1);
  DiffData d;
  for (int i = 0; i <= qmax; ++i) {
    v[i] = g.eval(n + i);
    d.scale = std::max(d.scale, std::abs(v[i]));
  }
  d.delta = difference_table(v);
  d.partial.assign(qmax + 1, 0.0);
  CompensatedSum s;
  for (int q = 1; q <= qmax; ++q) {
    s.add(gregory_coeff(q) * d.delta[q - 1]);
    d.partial[q] = s.value();
  }
  return d;
}

ConstantEstimate raabe(const AdmissibleFunction& g, double tol) {
  double inner = tol / 4;
  double worst = 0;
  int evals = 0;
  bool certified = true;
  auto f = [&](double t) {
    SigmaResult r = sigma_eval(g, t, inner);
    worst = std::max(worst, r.error_bound);
    certified = certified && r.certified();
    ++evals;
    return r.value;
  };
  IntegralResult ir = integrate_ex(f, 1.0, 2.0, tol / 2);
  ConstantEstimate c{ir.value, ir.error + worst, SigmaMethod::raabe_integral, evals};
  if (!certified) c.error_estimate = std::max(c.error_estimate, kInf);
  return c;
}

ConstantEstimate stirling(const AdmissibleFunction& g, double tol) {
  const int p = g.p();
  const int qmax = g.boosted_order(4);
  std::int64_t n = std::max<std::int64_t>(4, static_cast<std::int64_t>(std::ceil(g.convexity_onset)));
  CompensatedSum sum, integral;
  double mag = 0, int_err = 0;
  std::int64_t done = 1;
  ConstantEstimate best{0, kInf, SigmaMethod::stirling_limit, 0};
  int stalls = 0;
  for (int it = 0; it < 24 && n <= (std::int64_t{1} << 22); ++it, n *= 2) {
    add_range(g, done, n, sum, mag);
    IntegralResult ir = chunk_integral(g, static_cast<double>(done), static_cast<double>(n), tol / 64);
    integral.add(ir.value);
    int_err += ir.error;
    done = n;
    DiffData d = diff_data(g, static_cast<double>(n), qmax);
    double head = sum.value() - integral.value();
    for (int q = p; q <= qmax; ++q) {
      double bound = gregory_tail(q) * std::abs(d.delta[q]) + std::ldexp(kEps, q + 2) * d.scale;
      double err = bound + int_err + kEps * (mag + std::abs(integral.value()));
      if (err < best.error_estimate) {
        best.value = head + d.partial[q];
        best.error_estimate = err;
        best.iterations = static_cast<int>(n);
        stalls = 0;
      }
    }
    if (best.error_estimate <= tol) break;
    if (++stalls > 3) break;
  }
  return best;
}

ConstantEstimate gregory(const AdmissibleFunction& g, double tol) {
  ConstantEstimate best{0, kInf, SigmaMethod::gregory_series, 0};
  for (std::int64_t base : {1, 8, 64, 512, 4096}) {
    CompensatedSum head;
    double mag = 0, int_err = 0;
    if (base > 1) {
      add_range(g, 1, base, head, mag);
      IntegralResult ir = chunk_integral(g, 1.0, static_cast<double>(base), tol / 16);
      head.add(-ir.value);
      int_err = ir.error;
    }
    const int jmax = 40;
    std::vector<double> vals(jmax + 1);
    double scale = 0;
    for (int i = 0; i <= jmax; ++i) {
      vals[i] = g.eval(static_cast<double>(base + i));
      scale = std::max(scale, std::abs(vals[i]));
    }
    std::vector<double> delta = difference_table(vals);
    CompensatedSum s = head;
    double prev = kInf, prev2 = kInf, prev3 = kInf;
    int growth = 0;
    for (int j = 1; j <= jmax; ++j) {
      double term = gregory_coeff(j) * delta[j - 1];
      double noise = std::ldexp(kEps, j) * scale * std::abs(gregory_coeff(j));
      s.add(term);
      double a = std::abs(term);
      growth = (a > prev && j > 4) ? growth + 1 : 0;
      if (growth >= 3) break;
      bool decreasing = a <= prev && prev <= prev2 && prev2 <= prev3;
      // Same-signed tail with slowly growing ratios: a / (1 - r), r the largest recent ratio.
      double r = prev > 0 && std::isfinite(prev) ? a / prev : 1.0;
      if (prev2 > 0 && std::isfinite(prev2)) r = std::max(r, prev / prev2);
      if (prev3 > 0 && std::isfinite(prev3)) r = std::max(r, prev2 / prev3);
      double tail = a / (1 - std::min(r, 0.95));
      double err = tail + noise + int_err + kEps * mag;
      if (j >= 3 && a < tol && (decreasing || (a == 0 && prev == 0)) && err <= tol) {
        return {s.value(), err, SigmaMethod::gregory_series, j};
      }
      if (err < best.error_estimate && decreasing) best = {s.value(), err, SigmaMethod::gregory_series, j};
      prev3 = prev2;
      prev2 = prev;
      prev = a;
    }
  }
  throw RefusedError("gregory_series: terms did not decrease below tolerance", best.value, best.error_estimate);
}

ConstantEstimate euler_maclaurin(const AdmissibleFunction& g, double tol) {
  const int kmax = std::max(1, (usable_order(g, 25) + 1) / 2);
  ConstantEstimate best{0, kInf, SigmaMethod::euler_maclaurin, 0};
  CompensatedSum sum, integral;
  double mag = 0, int_err = 0;
  std::int64_t done = 1;
  std::int64_t n0 = std::max<std::int64_t>(16, static_cast<std::int64_t>(std::ceil(g.convexity_onset)));
  for (std::int64_t n = n0; n <= (std::int64_t{1} << 22); n *= 2) {
    add_range(g, done, n, sum, mag);
    IntegralResult ir = chunk_integral(g, static_cast<double>(done), static_cast<double>(n), tol / 64);
    integral.add(ir.value);
    int_err += ir.error;
    done = n;
    const double y = static_cast<double>(n);
    CompensatedSum s = sum;
    s.add(-integral.value());
    s.add(0.5 * g.eval(y));
    double last = kInf;
    double omitted = kInf;
    for (int k = 1; k <= kmax + 1; ++k) {
      double term = bernoulli_number(2 * k) / factorial(2 * k) * g.derivative(y, 2 * k - 1);
      if (k > kmax || std::abs(term) >= last) {
        omitted = std::abs(term);
        break;
      }
      s.add(-term);
      last = std::abs(term);
    }
    if (!std::isfinite(omitted)) omitted = last;
    double err = omitted + int_err + kEps * (mag + std::abs(integral.value()));
    if (err < best.error_estimate) best = {s.value(), err, SigmaMethod::euler_maclaurin, static_cast<int>(n)};
    if (best.error_estimate <= tol) break;
  }
  return best;
}

// int_0^inf P_n({t})/n! g^{(n)}(x+t) dt, with P_n the periodic Bernoulli function.
Estimate periodic_integral(const AdmissibleFunction& g, int n, double x, double tol) {
  const int periods = 48;
  CompensatedSum s;
  double err = 0;
  for (int k = 0; k < periods; ++k) {
    auto f = [&](double t) { return bernoulli_poly(n, t - k) / factorial(n) * g.derivative(x + t, n); };
    IntegralResult ir = integrate_ex(f, k, k + 1.0, tol / (4 * periods), 2000);
    s.add(ir.value);
    err += ir.error;
  }
  // Repeated integration by parts on [K, inf): sum_i (-1)^i B_{n+i}/(n+i)! f^{(i-1)}(K).
  const double y = x + periods;
  const int imax = usable_order(g, n + 10) - n + 1;
  double last = kInf;
  for (int i = 1; i <= imax; ++i) {
    double b = bernoulli_number(n + i);
    if (b == 0) continue;
    double term = ((i % 2) ? -1.0 : 1.0) * b / factorial(n + i) * g.derivative(y, n + i - 1);
    if (std::abs(term) >= last) break;
    s.add(term);
    last = std::abs(term);
  }
  if (!std::isfinite(last)) last = std::abs(g.derivative(y, n)) / factorial(n);
  return {s.value(), err + last};
}

int liu_order(int p) { return p <= 1 ? 0 : (p + 1) / 2; }

ConstantEstimate liu_sigma(const AdmissibleFunction& g, double tol) {
  const int q = liu_order(g.p());
  CompensatedSum s;
  s.add(0.5 * g.eval(1.0));
  Estimate tail;
  if (q == 0) {
    tail = periodic_integral(g, 1, 1.0, tol / 2);
    s.add(tail.value);
  } else {
    for (int k = 1; k <= q; ++k) s.add(-bernoulli_number(2 * k) / factorial(2 * k) * g.derivative(1.0, 2 * k - 1));
    tail = periodic_integral(g, 2 * q, 1.0, tol / 2);
    s.add(-tail.value);
  }
  return {s.value(), tail.error + kEps * std::abs(s.value()), SigmaMethod::liu_integral, q};
}

ConstantEstimate summable_split(const AdmissibleFunction& g, double tol) {
  if (!g.summable) throw RefusedError("summable_split: '" + g.name + "' is not summable");
  CompensatedSum sum, integral;
  double mag = 0, int_err = 0;
  std::int64_t done = 1;
  ConstantEstimate best{0, kInf, SigmaMethod::summable_split, 0};
  std::int64_t n0 = std::max<std::int64_t>(8, static_cast<std::int64_t>(std::ceil(g.convexity_onset)));
  for (std::int64_t n = n0; n <= (std::int64_t{1} << 22); n *= 2) {
    add_range(g, done, n, sum, mag);
    IntegralResult ir = chunk_integral(g, static_cast<double>(done), static_cast<double>(n), tol / 64);
    integral.add(ir.value);
    int_err += ir.error;
    done = n;
    double err = std::abs(g.eval(static_cast<double>(n))) + int_err + kEps * mag;
    if (err < best.error_estimate) best = {sum.value() - integral.value(), err, SigmaMethod::summable_split, static_cast<int>(n)};
    if (err <= tol) break;
  }
  return best;
}

}  // namespace

const char* to_string(SigmaMethod m) {
  switch (m) {
    case SigmaMethod::raabe_integral: return "raabe_integral";
    case SigmaMethod::stirling_limit: return "stirling_limit";
    case SigmaMethod::gregory_series: return "gregory_series";
    case SigmaMethod::euler_maclaurin: return "euler_maclaurin";
    case SigmaMethod::liu_integral: return "liu_integral";
    case SigmaMethod::summable_split: return "summable_split";
  }
  return "?";
}

SigmaMethod parse_sigma_method(const std::string& s) {
  if (s == "raabe" || s == "raabe_integral") return SigmaMethod::raabe_integral;
  if (s == "stirling" || s == "stirling_limit") return SigmaMethod::stirling_limit;
  if (s == "gregory" || s == "gregory_series") return SigmaMethod::gregory_series;
  if (s == "em" || s == "euler_maclaurin" || s == "euler-maclaurin") return SigmaMethod::euler_maclaurin;
  if (s == "liu" || s == "liu_integral") return SigmaMethod::liu_integral;
  if (s == "summable" || s == "summable_split") return SigmaMethod::summable_split;
  throw DomainError("unknown sigma method '" + s + "'");
}

ConstantEstimate sigma_constant(const AdmissibleFunction& g0, SigmaMethod method, double tol) {
  if (!(tol > 0)) throw DomainError("sigma_constant: tol must be positive");
  AdmissibleFunction g = resolved(g0);
  switch (method) {
    case SigmaMethod::raabe_integral: return raabe(g, tol);
    case SigmaMethod::stirling_limit: return stirling(g, tol);
    case SigmaMethod::gregory_series: return gregory(g, tol);
    case SigmaMethod::euler_maclaurin: return euler_maclaurin(g, tol);
    case SigmaMethod::liu_integral: return liu_sigma(g, tol);
    case SigmaMethod::summable_split: return summable_split(g, tol);
  }
  throw DomainError("sigma_constant: bad method");
}

std::vector<SigmaMethod> applicable_methods(const AdmissibleFunction& g) {
  std::vector<SigmaMethod> m = {SigmaMethod::raabe_integral, SigmaMethod::stirling_limit,
                                SigmaMethod::gregory_series, SigmaMethod::euler_maclaurin};
  if (g.deriv) m.push_back(SigmaMethod::liu_integral);
  if (g.summable) m.push_back(SigmaMethod::summable_split);
  return m;
}

std::vector<double> gregory_series_partial(const AdmissibleFunction& g, int terms) {
  std::vector<double> vals(terms);
  for (int i = 0; i < terms; ++i) vals[i] = g.eval(1.0 + i);
  std::vector<double> delta = difference_table(vals);
  std::vector<double> out;
  CompensatedSum s;
  for (int n = 1; n <= terms; ++n) {
    s.add(gregory_coeff(n) * delta[n - 1]);
    out.push_back(s.value());
  }
  return out;
}

ConstantEstimate euler_constant(const AdmissibleFunction& g0, double tol, SigmaMethod method) {
  AdmissibleFunction g = resolved(g0);
  ConstantEstimate c = sigma_constant(g, method, tol);
  CompensatedSum s;
  s.add(c.value);
  for (int j = 1; j <= g.p(); ++j) s.add(-gregory_coeff(j) * forward_difference(g.eval, j - 1, 1.0));
  c.value = s.value();
  return c;
}

Estimate euler_constant_integral(const AdmissibleFunction& g0, double tol, int max_terms) {
  AdmissibleFunction g = resolved(g0);
  const int p = g.p();
  CompensatedSum s;
  double err = 0;
  Estimate best{0, kInf};
  int k = 1;
  for (int K = 16; K <= max_terms; K *= 2) {
    for (; k < K; ++k) {
      IntegralResult ir = integrate_ex(g.eval, k, k + 1.0, 1e-14 * (1 + std::abs(g.eval(k))));
      CompensatedSum j;
      for (int i = 0; i <= p; ++i) j.add(gregory_coeff(i) * forward_difference(g.eval, i, k));
      j.add(-ir.value);
      s.add(j.value());
      err += ir.error;
    }
    double bound = gregory_tail(p) * std::abs(forward_difference(g.eval, p, K));
    best = {s.value(), bound + err};
    if (best.error <= tol) break;
  }
  return best;
}

std::optional<ConstantEstimate> sigma_bar(const AdmissibleFunction& g, double tol) {
  ConstantEstimate c = sigma_constant(g, SigmaMethod::raabe_integral, tol / 2);
  try {
    IntegralResult ir = integrate_ex(g.eval, 0.0, 1.0, tol / 2, 400);
    if (!std::isfinite(ir.value)) return std::nullopt;
    c.value -= ir.value;
    c.error_estimate += ir.error;
    return c;
  } catch (const RefusedError&) {
    return std::nullopt;
  }
}

double binet_J(const AdmissibleFunction& g, int q, double x, double tol) {
  if (q < 0) throw DomainError("binet_J: negative order");
  CompensatedSum s;
  for (int j = 0; j < q; ++j) s.add(gregory_coeff(j) * forward_difference(g.eval, j, x));
  s.add(-floored_integral(g.eval, x, x + 1, tol).value);
  return s.value();
}

double integral_from_one(const AdmissibleFunction& g, double x, double tol) {
  if (x == 1) return 0;
  if (x < 1) return -floored_integral(g.eval, x, 1.0, tol).value;
  // Panels of width 1, 2, 4, ... so a peak near 1 is not stepped over.
  CompensatedSum s;
  int panels = static_cast<int>(std::ceil(std::log2(x))) + 1;
  double a = 1, w = 1;
  while (a < x) {
    double b = std::min(x, a + w);
    s.add(floored_integral(g.eval, a, b, tol / panels).value);
    a = b;
    w *= 2;
  }
  return s.value();
}

Estimate stirling_residual(const AdmissibleFunction& g0, double x, double tol) {
  AdmissibleFunction g = resolved(g0);
  SigmaResult s = sigma_eval(g, x, tol / 4);
  ConstantEstimate c = sigma_constant(g, SigmaMethod::raabe_integral, tol / 4);
  CompensatedSum r;
  r.add(s.value);
  r.add(-c.value);
  r.add(-integral_from_one(g, x, tol / 4));
  for (int j = 1; j <= g.p(); ++j) r.add(gregory_coeff(j) * forward_difference(g.eval, j - 1, x));
  return {r.value(), s.error_bound + c.error_estimate + tol / 4};
}

Estimate burnside_residual(const AdmissibleFunction& g0, double x, double tol) {
  AdmissibleFunction g = resolved(g0);
  if (g.p() > 1) throw RefusedError("burnside_residual: needs p <= 1");
  SigmaResult s = sigma_eval(g, x, tol / 4);
  ConstantEstimate c = sigma_constant(g, SigmaMethod::raabe_integral, tol / 4);
  double v = s.value - c.value - integral_from_one(g, x - 0.5, tol / 4);
  return {v, s.error_bound + c.error_estimate + tol / 4};
}

Expansion asymptotic_expansion(const AdmissibleFunction& g0, int q, int m, double x, double tol) {
  if (q < 0 || m < 1) throw DomainError("asymptotic_expansion: need q >= 0 and m >= 1");
  AdmissibleFunction g = resolved(g0);
  if (q > 0 && !g.has_analytic_derivative(2 * q - 1) && 2 * q - 1 > 3)
    throw DomainError("asymptotic_expansion: derivatives of order " + std::to_string(2 * q - 1) + " unavailable");
  ConstantEstimate c = sigma_constant(g, SigmaMethod::raabe_integral, tol);
  CompensatedSum s;
  s.add(c.value);
  s.add(integral_from_one(g, x, tol));
  s.add(-g.eval(x) / (2.0 * m));
  double last = std::abs(g.eval(x)) / (2.0 * m);
  for (int k = 1; k <= q; ++k) {
    double term = std::pow(m, -2.0 * k) * bernoulli_number(2 * k) / factorial(2 * k) * g.derivative(x, 2 * k - 1);
    s.add(term);
    last = std::abs(term);
  }
  return {s.value(), last};
}

Estimate averaged_sum(const AdmissibleFunction& g, int m, double x, double tol) {
  if (m < 1) throw DomainError("averaged_sum: m must be positive");
  CompensatedSum s;
  double err = 0;
  for (int j = 0; j < m; ++j) {
    SigmaResult r = sigma_eval(g, x + static_cast<double>(j) / m, tol);
    s.add(r.value);
    err += r.error_bound;
  }
  return {s.value() / m, err / m};
}

LiuResult liu_eval(const AdmissibleFunction& g0, int q, double x, double tol) {
  if (q < 0) throw DomainError("liu_eval: negative order");
  AdmissibleFunction g = resolved(g0);
  if (2 * q + 1 < g.p()) throw DomainError("liu_eval: order too small for the degree of g");
  // The tail envelope must decrease: check the leading derivative along the tail.
  const int n = q == 0 ? 1 : 2 * q;
  double d1 = std::abs(g.derivative(x + 16, n)), d2 = std::abs(g.derivative(x + 64, n));
  if (d2 > d1 * (1 + 1e-9)) throw RefusedError("liu_eval: tail integrand does not decrease");
  ConstantEstimate c = liu_sigma(g, tol / 4);
  LiuResult r;
  CompensatedSum s;
  s.add(c.value);
  s.add(integral_from_one(g, x, tol / 4));
  s.add(-0.5 * g.eval(x));
  Estimate tail;
  if (q == 0) {
    tail = periodic_integral(g, 1, x, tol / 4);
    r.tail_integral = -tail.value;
  } else {
    for (int k = 1; k <= q; ++k) s.add(bernoulli_number(2 * k) / factorial(2 * k) * g.derivative(x, 2 * k - 1));
    tail = periodic_integral(g, 2 * q, x, tol / 4);
    r.tail_integral = tail.value;
  }
  s.add(r.tail_integral);
  r.value = s.value();
  r.error = c.error_estimate + tail.error + tol / 4;
  return r;
}

BoundPair wendel_bounds(const AdmissibleFunction& g0, double x, double a) {
  AdmissibleFunction g = resolved(g0);
  if (!(x > 0) || a < 0) throw DomainError("wendel_bounds: need x > 0 and a >= 0");
  const int p = g.p();
  double b;
  if (p == 0) {
    b = std::ceil(a) * std::abs(g.eval(x));
  } else {
    b = std::abs(gen_binomial(a - 1, p)) *
        std::abs(forward_difference(g.eval, p - 1, x + a) - forward_difference(g.eval, p - 1, x));
  }
  BoundPair bp{-b, b, "rho_x^{p+1}[Sigma g](a)", x >= g.convexity_onset};
  return bp;
}

BoundPair stirling_bounds(const AdmissibleFunction& g0, double x) {
  AdmissibleFunction g = resolved(g0);
  const int p = g.p();
  double b = gregory_tail(p) * std::abs(forward_difference(g.eval, p, x));
  return {-b, b, "J^{p+1}[Sigma g](x)", x >= g.convexity_onset};
}

BoundPair bracket_refine(const AdmissibleFunction& g0, int r, double x) {
  if (r < 0) throw DomainError("bracket_refine: negative r");
  AdmissibleFunction g = resolved(g0);
  const int p = g.p();
  if (r == 0) return stirling_bounds(g, x);
  if (g.sign_at(p + r) == 0) {
    ConvexityReport rep = convexity_probe(g, p + r, x, x + 64);
    if (rep.violation) throw RefusedError("bracket_refine: g is not convex of the required order");
  }
  CompensatedSum c;
  for (int j = p + 1; j <= p + r; ++j) c.add(-gregory_coeff(j) * forward_difference(g.eval, j - 1, x));
  double half = gregory_tail(p + r) * std::abs(forward_difference(g.eval, p + r, x));
  return {c.value() - half, c.value() + half, "J^{p+1}[Sigma g](x)", x >= g.convexity_onset};
}

double webster_A(const AdmissibleFunction& g, int p, double x) {
  if (p < 1) throw DomainError("webster_A: p must be at least 1");
  CompensatedSum s;
  s.add(binet_J(g, p + 1, x));
  s.add(floored_integral([&](double t) { return t * g.eval(x + t); }, 0.0, 1.0, 1e-14).value / p);
  for (int j = 1; j <= p; ++j) s.add(-j * gregory_coeff(j) * forward_difference(g.eval, j - 1, x + 1) / p);
  return s.value();
}

double webster_B(const AdmissibleFunction& g, int p, double x) {
  if (p < 1) throw DomainError("webster_B: p must be at least 1");
  double base = forward_difference(g.eval, p - 1, x);
  auto f = [&](double t) { return gen_binomial(t - 1, p) * (forward_difference(g.eval, p - 1, x + t) - base); };
  return floored_integral(f, 0.0, 1.0, 1e-14).value;
}

BoundPair webster_bounds(const AdmissibleFunction& g0, double x, int p) {
  AdmissibleFunction g = resolved(g0);
  if (p < 0) p = g.p();
  double lo, hi;
  if (p == 0) {
    double in = floored_integral(g.eval, x, x + 1, 1e-14).value;
    double L = g.eval(x) - in, U = g.eval(x) + g.eval(x + 1) - in;
    lo = std::min(-L, -U);
    hi = std::max(-L, -U);
  } else {
    double J = binet_J(g, p + 1, x), A = webster_A(g, p, x);
    lo = std::min(-J, -A);
    hi = std::max(-J, -A);
  }
  return {lo, hi, "J^{p+1}[Sigma g](x)", x >= g.convexity_onset};
}

}  // namespace isum
