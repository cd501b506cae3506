#include "isum/sigma.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <vector>

#include "isum/asym.hpp"
#include "isum/errors.hpp"

namespace isum {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

const AdmissibleFunction& with_degree(const AdmissibleFunction& g, AdmissibleFunction& storage) {
  if (g.degree_p >= 0) return g;
  storage = resolve_degree(g);
  return storage;
}

// Running sum of g(k) - g(x+k) plus what is needed for a rounding estimate.
struct PartialSum {
  CompensatedSum sum;
  double sumsq = 0;
  std::int64_t upto = 1;  // terms k = 1..upto-1 included

  void extend(const AdmissibleFunction& g, double x, std::int64_t n) {
    for (std::int64_t k = upto; k < n; ++k) {
      double a = g.eval(static_cast<double>(k)), b = g.eval(x + static_cast<double>(k));
      sum.add(a - b);
      sumsq += a * a + b * b;
    }
    upto = std::max(upto, n);
  }
  double rounding() const { return kEps * (std::abs(sum.value()) + 2 * std::sqrt(sumsq)); }
};

struct Stage {
  double value = 0;
  double bound = 0;  // truncation plus rounding of the corrections
  int q = 0;
  BoundKind kind = BoundKind::wendel_tight;
};

// Best f_n^q over the admissible orders q at a fixed n.
Stage best_stage(const AdmissibleFunction& g, double x, std::int64_t n, int p, int qmax, double head) {
  const double nn = static_cast<double>(n);
  std::vector<double> at_n(qmax + 1), at_nx(qmax + 1);
  double m = 0;
  for (int i = 0; i <= qmax; ++i) {
    at_n[i] = g.eval(nn + i);
    at_nx[i] = g.eval(nn + x + i);
    m = std::max({m, std::abs(at_n[i]), std::abs(at_nx[i])});
  }
  std::vector<double> dn = difference_table(at_n), dnx = difference_table(at_nx);
  Stage best;
  best.bound = std::numeric_limits<double>::infinity();
  CompensatedSum corr;
  double corr_noise = 0;
  for (int q = 0; q <= qmax; ++q) {
    if (q >= 1) {
      double c = gen_binomial(x, q);
      corr.add(c * dn[q - 1]);
      corr_noise += std::abs(c) * std::ldexp(kEps, q) * m;
    }
    if (q < p) continue;
    double cx1 = std::abs(gen_binomial(x - 1, q));
    double trunc;
    BoundKind kind;
    if (q == 0) {
      trunc = std::ceil(x) * std::abs(dn[0]);
      kind = BoundKind::wendel_coarse;
    } else {
      trunc = cx1 * std::abs(dnx[q - 1] - dn[q - 1]);
      kind = BoundKind::wendel_tight;
    }
    double noise = 4 * cx1 * std::ldexp(kEps, q) * m + corr_noise;
    double total = trunc + noise;
    if (total < best.bound) {
      best.bound = total;
      best.value = head + corr.value();
      best.q = q;
      best.kind = kind;
    }
  }
  return best;
}

SigmaResult sigma_core(const AdmissibleFunction& g, double x, double tol, const SigmaOptions& opt) {
  const int p = g.p();
  const int qmax = g.boosted_order(opt.max_boost);
  std::int64_t n = std::max<std::int64_t>(2, static_cast<std::int64_t>(std::ceil(g.convexity_onset)));
  PartialSum ps;
  const double gx = g.eval(x);
  SigmaResult best;
  best.error_bound = std::numeric_limits<double>::infinity();
  best.bound_kind = BoundKind::uncertified;
  int stalls = 0;
  while (true) {
    if (n > opt.n_cap) break;
    ps.extend(g, x, n);
    double head = ps.sum.value() - gx;
    Stage st = best_stage(g, x, n, p, qmax, head);
    double err = st.bound + ps.rounding() + kEps * std::abs(gx);
    if (err < best.error_bound) {
      best = {st.value, err, n, st.q, st.kind};
      stalls = 0;
    } else if (++stalls >= 3) {
      return best;
    }
    if (best.error_bound <= tol) return best;
    if (n > opt.n_cap / 2) break;
    n *= 2;
  }
  if (best.error_bound > tol) best.bound_kind = BoundKind::uncertified;
  return best;
}

}  // namespace

const char* to_string(BoundKind k) {
  switch (k) {
    case BoundKind::wendel_coarse: return "wendel_coarse";
    case BoundKind::wendel_tight: return "wendel_tight";
    case BoundKind::summable_tail: return "summable_tail";
    case BoundKind::asymptotic_tail: return "asymptotic_tail";
    case BoundKind::uncertified: return "uncertified";
  }
  return "?";
}

std::int64_t default_n_cap() {
  if (const char* s = std::getenv("SIGMA_CACHE_N")) {
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (end != s && v >= 2) return v;
  }
  return std::int64_t{1} << 24;
}

double rho(const AdmissibleFunction& g, int p, double a, double x) {
  if (!(a > 0)) throw DomainError("rho: a must be positive");
  if (x == 0) return 0;
  CompensatedSum s;
  s.add(g.eval(x + a));
  for (int j = 0; j < p; ++j) s.add(-gen_binomial(x, j) * forward_difference(g.eval, j, a));
  return s.value();
}

double f_np(const AdmissibleFunction& g, int p, std::int64_t n, double x) {
  if (n < 1) throw DomainError("f_np: n must be at least 1");
  if (x == 1) return 0;
  CompensatedSum s;
  s.add(-g.eval(x));
  for (std::int64_t k = 1; k < n; ++k) s.add(g.eval(static_cast<double>(k)) - g.eval(x + static_cast<double>(k)));
  for (int j = 1; j <= p; ++j)
    s.add(gen_binomial(x, j) * forward_difference(g.eval, j - 1, static_cast<double>(n)));
  return s.value();
}

double sigma_at_integers(const AdmissibleFunction& g, std::int64_t n) {
  if (n < 1) throw DomainError("sigma_at_integers: n must be at least 1");
  CompensatedSum s;
  for (std::int64_t k = 1; k < n; ++k) s.add(g.eval(static_cast<double>(k)));
  return s.value();
}

SigmaResult sigma_eval(const AdmissibleFunction& g0, double x, double tol, const SigmaOptions& opt) {
  if (!(x > 0)) throw DomainError("sigma_eval: x must be positive");
  if (!(tol > 0)) throw DomainError("sigma_eval: tol must be positive");
  AdmissibleFunction storage;
  const AdmissibleFunction& g = with_degree(g0, storage);
  SigmaResult r;
  r.p_used = g.p();
  if (x == 1) return r;

  if (x == std::floor(x) && x <= 1e7) {
    auto n = static_cast<std::int64_t>(x);
    CompensatedSum s;
    double sumsq = 0;
    for (std::int64_t k = 1; k < n; ++k) {
      double v = g.eval(static_cast<double>(k));
      s.add(v);
      sumsq += v * v;
    }
    r.value = s.value();
    r.error_bound = kEps * (std::abs(r.value) + 2 * std::sqrt(sumsq));
    r.n_used = n;
    return r;
  }

  double x0 = x;
  CompensatedSum shift;
  double shift_sq = 0;
  if (x > opt.reduce_above) {
    double m = std::ceil(x) - 2;
    x0 = x - m;
    for (double k = 0; k < m; ++k) {
      double v = g.eval(x0 + k);
      shift.add(v);
      shift_sq += v * v;
    }
  }
  r = sigma_core(g, x0, tol, opt);
  if (x0 != x) {
    r.value += shift.value();
    r.error_bound += kEps * (std::abs(shift.value()) + 2 * std::sqrt(shift_sq));
  }
  return r;
}

SigmaResult sigma_eval_summable(const AdmissibleFunction& g, double x, double tol, const SigmaOptions& opt) {
  if (!(x > 0)) throw DomainError("sigma_eval_summable: x must be positive");
  if (!g.summable) throw DomainError("sigma_eval_summable: '" + g.name + "' is not flagged summable");
  SigmaResult r;
  r.p_used = 0;
  r.bound_kind = BoundKind::summable_tail;
  if (x == 1) return r;
  PartialSum ps;
  const double gx = g.eval(x);
  std::int64_t n = std::max<std::int64_t>(2, static_cast<std::int64_t>(std::ceil(g.convexity_onset)));
  double prev_tail = std::abs(g.eval(static_cast<double>(n)));
  while (n <= opt.n_cap) {
    ps.extend(g, x, n);
    double gn = g.eval(static_cast<double>(n));
    // The tail bound needs |g| eventually monotone; a rise means it is not.
    if (std::abs(gn) > prev_tail * (1 + 1e-12)) return sigma_eval(g, x, tol, opt);
    prev_tail = std::abs(gn);
    r.value = ps.sum.value() - gx;
    r.error_bound = std::ceil(x) * std::abs(gn) + ps.rounding();
    r.n_used = n;
    if (r.error_bound <= tol) return r;
    n *= 2;
  }
  r.bound_kind = BoundKind::uncertified;
  return r;
}

SigmaResult sigma_extend(const AdmissibleFunction& g, double x, double tol, const SigmaOptions& opt) {
  if (x > 0) return sigma_eval(g, x, tol, opt);
  if (x == std::floor(x)) throw DomainError("sigma_extend: pole at a nonpositive integer");
  if (g.extension != DomainExtension::punctured_reals)
    throw DomainError("sigma_extend: '" + g.name + "' is only defined on the positive half-line");
  double m = std::floor(-x) + 1;
  SigmaResult r = sigma_eval(g, x + m, tol, opt);
  CompensatedSum back;
  for (double k = 1; k <= m; ++k) back.add(g.eval(x + m - k));
  r.value -= back.value();
  r.error_bound += kEps * m * std::abs(back.value());
  return r;
}

namespace {

// -sum_{m>=0} h(x+m) with h = g^{(r)}, by Euler-Maclaurin on the tail.
SigmaResult derivative_by_tail(const AdmissibleFunction& g, int r, double x) {
  const double y0 = std::max(12.0, 2.0 * r);
  auto N = static_cast<std::int64_t>(std::ceil(std::max(0.0, y0 - x)));
  CompensatedSum s;
  for (std::int64_t m = 0; m < N; ++m) s.add(g.derivative(x + static_cast<double>(m), r));
  double y = x + static_cast<double>(N);
  s.add(-g.derivative(y, r - 1));
  s.add(0.5 * g.derivative(y, r));
  double last = std::numeric_limits<double>::infinity();
  int i = 1;
  for (; i <= 12; ++i) {
    if (!g.has_analytic_derivative(r + 2 * i - 1)) break;
    double term = bernoulli_number(2 * i) / std::tgamma(2.0 * i + 1) * g.derivative(y, r + 2 * i - 1);
    if (std::abs(term) >= last) break;
    s.add(-term);
    last = std::abs(term);
  }
  SigmaResult res;
  res.value = -s.value();
  res.error_bound = last + 8 * kEps * std::abs(res.value);
  res.n_used = N;
  res.p_used = 0;
  res.bound_kind = BoundKind::asymptotic_tail;
  return res;
}

}  // namespace

SigmaResult sigma_derivative(const AdmissibleFunction& g0, int r, double x, double tol) {
  if (r < 0) throw DomainError("sigma_derivative: negative order");
  if (!(x > 0)) throw DomainError("sigma_derivative: x must be positive");
  AdmissibleFunction storage;
  const AdmissibleFunction& g = with_degree(g0, storage);
  if (r == 0) return sigma_eval(g, x, tol);
  const int p = g.p();
  if (r > p && g.has_analytic_derivative(r + 3)) {
    SigmaResult res = derivative_by_tail(g, r, x);
    if (res.error_bound <= tol) return res;
  }
  AdmissibleFunction h = derivative_function(g, r);
  SigmaResult s = sigma_eval(h, x, tol / 2);
  ConstantEstimate c = sigma_constant(h, SigmaMethod::raabe_integral, tol / 2);
  s.value += g.derivative(1.0, r - 1) - c.value;
  s.error_bound += c.error_estimate;
  return s;
}

}  // namespace isum
