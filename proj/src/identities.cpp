#include "isum/identities.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "isum/errors.hpp"

namespace isum {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

AdmissibleFunction resolved(const AdmissibleFunction& g) {
  return g.degree_p >= 0 ? g : resolve_degree(g);
}

double sigma_of(const AdmissibleFunction& g, double tol, double& err) {
  ConstantEstimate c = sigma_constant(g, SigmaMethod::raabe_integral, tol);
  err += c.error_estimate;
  return c.value;
}

// A derived function of degree p whose convexity signs follow g shifted by `shift` orders.
AdmissibleFunction derived(const AdmissibleFunction& g, std::string name, RealFn eval,
                           std::function<double(double, int)> deriv, int p, int shift) {
  AdmissibleFunction h = make_function(std::move(name), std::move(eval), p, g.sign_at(p + shift),
                                       g.convexity_onset, g.alternating);
  h.deriv = std::move(deriv);
  h.max_analytic_order = g.max_analytic_order;
  h.summable = p == 0 && g.summable;
  return h;
}

}  // namespace

Estimate multiplication_lhs(const AdmissibleFunction& g, int m, double x, double tol) {
  if (m < 1 || !(x > 0)) throw DomainError("multiplication_lhs: need m >= 1 and x > 0");
  CompensatedSum s;
  double err = 0;
  for (int j = 0; j < m; ++j) {
    SigmaResult r = sigma_eval(g, (x + j) / m, tol / m);
    s.add(r.value);
    err += r.error_bound;
  }
  return {s.value(), err};
}

Estimate multiplication_constant(const AdmissibleFunction& g0, int m, double tol) {
  if (m < 1) throw DomainError("multiplication_constant: m must be positive");
  if (m == 1) return {0.0, 0.0};
  AdmissibleFunction g = resolved(g0);
  AdmissibleFunction gm = scaled(g, 1.0 / m);
  double err = 0;
  double sg = sigma_of(g, tol / (4 * m), err);
  double sm = sigma_of(gm, tol / 4, err);
  IntegralResult ir = integrate_ex(g.eval, 1.0 / m, 1.0, tol / (4 * m), 20000);
  err = m * err + m * ir.error;
  return {m * sg - sm - m * ir.value, err};
}

Estimate multiplication_rhs(const AdmissibleFunction& g0, int m, double x, double tol) {
  AdmissibleFunction g = resolved(g0);
  Estimate c = multiplication_constant(g, m, tol / 2);
  SigmaResult s = sigma_eval(scaled(g, 1.0 / m), x, tol / 2);
  return {c.value + s.value, c.error + s.error_bound};
}

WebsterSolution webster_solve(const WebsterProblem& P, double x, double tol) {
  if (P.m < 1 || !(P.a > 0)) throw DomainError("webster_solve: need m >= 1 and a > 0");
  if (!(x > 0)) throw DomainError("webster_solve: x must be positive");
  const double am = P.a * P.m;
  AdmissibleFunction h = scaled(resolved(P.h), am);
  auto f = [&](double t, double& err) {
    SigmaResult hi = sigma_eval(h, (t + P.a) / am, tol / 4);
    SigmaResult lo = sigma_eval(h, t / am, tol / 4);
    err = hi.error_bound + lo.error_bound;
    if (!hi.certified() || !lo.certified()) throw RefusedError("webster_solve: uncertified sum", hi.value - lo.value);
    return hi.value - lo.value;
  };
  WebsterSolution out;
  out.value = f(x, out.error);
  CompensatedSum s;
  for (int j = 0; j < P.m; ++j) {
    double e = 0;
    s.add(j == 0 ? out.value : f(x + P.a * j, e));
  }
  s.add(-P.h.eval(x));
  out.residual = s.value();
  return out;
}

const char* to_string(WallisVariant v) {
  switch (v) {
    case WallisVariant::shift0: return "shift0";
    case WallisVariant::shift1: return "shift1";
    case WallisVariant::scale2: return "scale2";
  }
  return "?";
}

WallisVariant parse_wallis_variant(const std::string& s) {
  if (s == "shift0") return WallisVariant::shift0;
  if (s == "shift1") return WallisVariant::shift1;
  if (s == "scale2") return WallisVariant::scale2;
  throw DomainError("unknown wallis variant '" + s + "'");
}

std::vector<double> wallis_limit(const AdmissibleFunction& g0, WallisVariant variant, int N, double tol) {
  if (N < 1) throw DomainError("wallis_limit: N must be positive");
  AdmissibleFunction g = resolved(g0);
  const int p = g.p();
  const int pt = std::max(p - 1, 0);
  auto gd = g.deriv;
  AdmissibleFunction gt;
  if (variant == WallisVariant::scale2) {
    gt = multiplied(scaled(g, 2.0), 2.0);
  } else if (variant == WallisVariant::shift1) {
    std::function<double(double, int)> d;
    if (gd) d = [g](double x, int r) { return std::ldexp(g.derivative(2 * x, r) - g.derivative(2 * x - 1, r), r); };
    gt = derived(g, g.name + "~shift1", [g](double x) { return g.eval(2 * x) - g.eval(2 * x - 1); }, d, pt, 1);
  } else {
    std::function<double(double, int)> d;
    if (gd) d = [g](double x, int r) { return std::ldexp(g.derivative(2 * x + 1, r) - g.derivative(2 * x, r), r); };
    gt = derived(g, g.name + "~shift0", [g](double x) { return g.eval(2 * x + 1) - g.eval(2 * x); }, d, pt, 1);
  }
  double err = 0;
  const double st = sigma_of(gt, tol, err);
  const double sg = variant == WallisVariant::scale2 ? sigma_of(g, tol, err) : 0.0;
  const double int12 = variant == WallisVariant::scale2 ? integrate(g.eval, 1.0, 2.0, tol) : 0.0;

  std::vector<double> out;
  CompensatedSum alt, integral;
  for (int n = 1; n <= N; ++n) {
    alt.add(g.eval(2.0 * n - 1));
    alt.add(-g.eval(2.0 * n));
    CompensatedSum h;
    switch (variant) {
      case WallisVariant::scale2: {
        h.add(st - sg);
        h.add(integrate(g.eval, 2.0 * n + 1, 2.0 * n + 2, tol) - int12);
        for (int j = 1; j <= p; ++j)
          h.add(gregory_coeff(j) * (forward_difference(g.eval, j - 1, 2.0 * n + 1) -
                                    forward_difference(gt.eval, j - 1, n + 1.0)));
        break;
      }
      case WallisVariant::shift1: {
        integral.add(integrate(gt.eval, n, n + 1.0, tol));
        h.add(st);
        h.add(integral.value());
        for (int j = 1; j <= pt; ++j) h.add(-gregory_coeff(j) * forward_difference(gt.eval, j - 1, n + 1.0));
        break;
      }
      case WallisVariant::shift0: {
        if (n > 1) integral.add(integrate(gt.eval, n - 1.0, n, tol));
        h.add(g.eval(2.0 * n) - g.eval(1.0) - st);
        h.add(-integral.value());
        for (int j = 1; j <= pt; ++j) h.add(gregory_coeff(j) * forward_difference(gt.eval, j - 1, n));
        break;
      }
    }
    out.push_back(h.value() + alt.value());
  }
  return out;
}

Estimate reflection_periodic(const AdmissibleFunction& g0, Parity parity, double x, double tol) {
  AdmissibleFunction g = resolved(g0);
  if (x == std::floor(x)) throw DomainError("reflection_periodic: x must not be an integer");
  const double sgn = parity == Parity::odd ? -1.0 : 1.0;
  for (int i = 0; i < 20; ++i) {
    double t = 0.137 + 0.731 * i;
    double a = g.eval(t), b = g.eval(-t);
    if (std::abs(b - sgn * a) > 1e-10 * (1 + std::abs(a)))
      throw RefusedError("reflection_periodic: g does not have the declared parity");
  }
  const int q = g.boosted_order(4);
  auto stage = [&](std::int64_t n, double& mag) {
    CompensatedSum s;
    mag = 0;
    auto add = [&](double v) {
      s.add(v);
      mag = std::max(mag, std::abs(v));
    };
    const double nd = static_cast<double>(n);
    if (parity == Parity::odd) {
      for (std::int64_t k = -(n - 1); k <= n - 1; ++k) add(-g.eval(x + static_cast<double>(k)));
      add(-g.eval(x - nd));
      for (int j = 1; j <= q; ++j)
        add((gen_binomial(x, j) - gen_binomial(1 - x, j)) * forward_difference(g.eval, j - 1, nd));
    } else {
      add(-g.eval(x));
      for (std::int64_t k = 1; k <= n - 1; ++k) {
        double kd = static_cast<double>(k);
        add(2 * g.eval(kd) - g.eval(x + kd) - g.eval(x - kd));
      }
      add(-g.eval(x - nd));
      for (int j = 1; j <= q; ++j)
        add((gen_binomial(x, j) + gen_binomial(1 - x, j)) * forward_difference(g.eval, j - 1, nd));
    }
    return s.value();
  };
  double mag = 0;
  double prev = stage(16, mag);
  Estimate best{prev, std::numeric_limits<double>::infinity()};
  for (std::int64_t n = 32; n <= (std::int64_t{1} << 20); n *= 2) {
    double v = stage(n, mag);
    double change = std::abs(v - prev) + 64 * kEps * mag * std::sqrt(static_cast<double>(n));
    if (change < best.error) best = {v, change};
    prev = v;
    if (change <= tol) break;
  }
  return best;
}

Estimate rational_argument(const AdmissibleFunction& g0, int a, int b, std::int64_t K, double tol) {
  if (!(0 < a && a < b)) throw DomainError("rational_argument: need 0 < a < b");
  AdmissibleFunction g = resolved(g0);
  const int q = g.boosted_order(4);
  const double x = static_cast<double>(a) / b;
  // Root-of-unity table and filter weights (1/b)(1 - w^{-a j}).
  std::vector<std::complex<double>> w(b), weight(b);
  for (int r = 0; r < b; ++r) w[r] = std::polar(1.0, 2 * M_PI * r / b);
  for (int j = 0; j < b; ++j) weight[j] = (1.0 - w[(b - (a * j) % b) % b]) / static_cast<double>(b);
  std::vector<CompensatedSum> re(b), im(b);
  double mag = 0;
  std::int64_t k_done = 0;  // S_j accumulated over k = 1..k_done
  Estimate best{0, std::numeric_limits<double>::infinity()};
  double prev = std::numeric_limits<double>::quiet_NaN();
  for (std::int64_t n = 8; static_cast<std::int64_t>(b) * n <= std::max<std::int64_t>(K, 8 * b); n *= 2) {
    const std::int64_t kmax = static_cast<std::int64_t>(b) * n - 1;
    for (std::int64_t k = k_done + 1; k <= kmax; ++k) {
      double v = g.eval(static_cast<double>(k) / b);
      mag += std::abs(v);
      for (int j = 0; j < b; ++j) {
        std::complex<double> t = w[(j * (k % b)) % b] * v;
        re[j].add(t.real());
        im[j].add(t.imag());
      }
    }
    k_done = kmax;
    std::complex<double> total = 0;
    for (int j = 0; j < b; ++j) total += weight[j] * std::complex<double>(re[j].value(), im[j].value());
    CompensatedSum s;
    s.add(total.real());
    for (int j = 1; j <= q; ++j) s.add(gen_binomial(x, j) * forward_difference(g.eval, j - 1, static_cast<double>(n)));
    double v = s.value();
    if (!std::isnan(prev)) {
      double change = std::abs(v - prev) + 4 * kEps * mag;
      if (change < best.error) best = {v, change};
      if (change <= tol) break;
    }
    prev = v;
  }
  return best;
}

GautschiResult gautschi_bounds(const AdmissibleFunction& g0, double x, double a, double tol) {
  if (!(x > 0) || a < 0) throw DomainError("gautschi_bounds: need x > 0 and a >= 0");
  AdmissibleFunction g = resolved(g0);
  const double ca = std::ceil(a), fa = std::floor(a);
  GautschiResult out;
  // Second differences of Sigma g across [x + floor a, x + ceil a + 1].
  const double lo = x + fa, hi = x + ca + 1, h = (hi - lo) / 8;
  int pos = 0, neg = 0;
  for (int i = 1; i < 8; ++i) {
    double t = lo + i * h;
    SigmaResult l = sigma_eval(g, t - h, tol), c = sigma_eval(g, t, tol), r = sigma_eval(g, t + h, tol);
    double d2 = l.value - 2 * c.value + r.value;
    double noise = 4 * (l.error_bound + c.error_bound + r.error_bound);
    if (d2 > noise) ++pos;
    if (d2 < -noise) ++neg;
  }
  if (pos > 0 && neg > 0) throw RefusedError("gautschi_bounds: Sigma g is neither convex nor concave here");
  out.concave = neg > 0;
  const double w = a - ca;
  double l = w * g.eval(x + ca), u = w * g.eval(x + fa);
  out.bounds = {std::min(l, u), std::max(l, u), "Sigma g(x+a) - Sigma g(x+ceil a)", true};
  out.middle = w == 0 ? 0.0 : w * sigma_derivative(g, 1, x + ca, tol).value;
  out.target = w == 0 ? 0.0 : sigma_eval(g, x + a, tol).value - sigma_eval(g, x + ca, tol).value;
  return out;
}

ElevatorResult elevator(const AdmissibleFunction& g0, int r, double a, double x, double tol) {
  if (r < 1) throw DomainError("elevator: r must be at least 1");
  if (!(a > 0) || !(x > 0)) throw DomainError("elevator: need a > 0 and x > 0");
  AdmissibleFunction g = resolved(g0);
  if (!g.has_analytic_derivative(r) && r > 3) throw DomainError("elevator: derivatives of order r unavailable");
  AdmissibleFunction gr = derivative_function(g, r);
  ElevatorResult out;
  ConstantEstimate sr = sigma_constant(gr, SigmaMethod::raabe_integral, tol / 8);
  out.shift_constant = g.derivative(1.0, r - 1) - sr.value;
  const double inner = tol / 8;
  auto phi = [&](double t) { return sigma_eval(gr, t, inner).value + out.shift_constant; };
  auto integ = [&](const RealFn& f, double lo, double hi) {
    if (lo == hi) return 0.0;
    return integrate_ex(f, lo, hi, tol / 8, 2000).value;
  };
  out.defect = integ(phi, a, a + 1) - g.derivative(a, r - 1);
  if (std::abs(out.defect) > std::max(tol, 1e-9))
    throw RefusedError("elevator: compatibility integral violated, defect " + std::to_string(out.defect));
  std::vector<double> c(r, 0.0);
  for (int k = 1; k <= r - 1; ++k) {
    CompensatedSum s;
    for (int j = 0; j <= r - k - 1; ++j) {
      const int e = r - j - k;
      auto kern = [&](double t) { return std::pow(a + 1 - t, e) / std::tgamma(e + 1.0) * phi(t); };
      s.add(bernoulli_number(j) / std::tgamma(j + 1.0) * (g.derivative(a, j + k - 1) - integ(kern, a, a + 1)));
    }
    c[k] = s.value();
  }
  auto fa = [&](double y) {
    CompensatedSum s;
    double pw = 1;
    for (int k = 1; k <= r - 1; ++k) {
      pw *= (y - a) / k;
      s.add(c[k] * pw);
    }
    auto kern = [&](double t) { return std::pow(y - t, r - 1) / std::tgamma(static_cast<double>(r)) * phi(t); };
    s.add(integ(kern, a, y));
    return s.value();
  };
  out.value = fa(x) - fa(1.0);
  out.error = tol / 2 + sr.error_estimate * (std::abs(x - 1) + 1);
  return out;
}

SeriesResult euler_series_analogue(const AdmissibleFunction& g0, int K, double tol) {
  if (K < 1) throw DomainError("euler_series_analogue: K must be positive");
  AdmissibleFunction g = resolved(g0);
  SeriesResult out;
  CompensatedSum s;
  double fact = 1;  // (k+1)!
  double a1 = INFINITY, a2 = INFINITY;
  for (int k = 1; k <= K; ++k) {
    fact *= k + 1;
    double t = sigma_derivative(g, k, 1.0, tol * fact).value / fact;
    double at = std::abs(t);
    if (k > 3 && at > a1 && a1 > a2) throw RefusedError("euler_series_analogue: terms grow", s.value(), at);
    s.add(t);
    out.terms = k;
    out.last_term = at;
    a2 = a1;
    a1 = at;
    if (at < tol && k > 1) break;
  }
  out.value = s.value();
  return out;
}

}  // namespace isum
