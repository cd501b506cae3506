#include "isum/catalog.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/polygamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "isum/asym.hpp"
#include "isum/errors.hpp"
#include "isum/sigma.hpp"

#ifndef ISUM_GOLDENS_DEFAULT
#define ISUM_GOLDENS_DEFAULT "data/goldens.tsv"
#endif

namespace isum {

namespace {

constexpr double kPi = 3.14159265358979323846;

double fact(int n) { return std::tgamma(n + 1.0); }
double sgn_pow(int r) { return (r % 2) ? -1.0 : 1.0; }  // (-1)^r

// --- forward-mode dual numbers for d/ds of the Hurwitz series ---
struct Dual {
  double v = 0, d = 0;
};
Dual operator+(Dual a, Dual b) { return {a.v + b.v, a.d + b.d}; }
Dual operator*(Dual a, Dual b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
Dual operator/(Dual a, Dual b) { return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)}; }
Dual operator*(double c, Dual a) { return {c * a.v, c * a.d}; }
Dual operator+(Dual a, double c) { return {a.v + c, a.d}; }

double value_of(Dual v) { return v.d; }

// y^{-t} for real y > 0.
double powneg(double y, double t) { return std::exp(-t * std::log(y)); }
Dual powneg(double y, Dual t) {
  double L = std::log(y), e = std::exp(-t.v * L);
  return {e, -t.d * L * e};
}

// zeta(s, a) by Euler-Maclaurin after shifting a past 24.
template <class T>
T hurwitz_em(T s, double a) {
  const int N = std::max(0, static_cast<int>(std::ceil(24.0 - a)));
  T sum{};
  for (int k = 0; k < N; ++k) sum = sum + powneg(a + k, s);
  const double y = a + N;
  // y^{1-s}/(s-1) + y^{-s}/2
  T ypow = powneg(y, s);
  sum = sum + (y * ypow) / (s + -1.0) + 0.5 * ypow;
  T rising = s;  // (s)_{2j-1}
  double yk = 1.0 / y;
  T term_pow = ypow;
  for (int j = 1; j <= 14; ++j) {
    term_pow = yk * term_pow;  // y^{-s-2j+1}
    double c = bernoulli_number(2 * j) / fact(2 * j);
    sum = sum + c * (rising * term_pow);
    rising = rising * (s + (2.0 * j - 1)) * (s + 2.0 * j);
    term_pow = yk * term_pow;
  }
  return sum;
}

// Falling product (-s)(-s-1)...(-s-r+1).
double falling(double t, int r) {
  double p = 1;
  for (int i = 0; i < r; ++i) p *= t - i;
  return p;
}

// d^r/dx^r ln(a x + b).
double dlog_affine(double a, double b, double x, int r) {
  if (r == 0) return std::log(a * x + b);
  return sgn_pow(r - 1) * fact(r - 1) * std::pow(a / (a * x + b), r);
}

// d^r/dx^r (x ln x) for r >= 1.
double dxlogx(double x, int r) {
  if (r == 1) return std::log(x) + 1;
  return sgn_pow(r) * fact(r - 2) / std::pow(x, r - 1);
}

double lgamma_deriv(double x, int r) {
  if (r == 0) return std::lgamma(x);
  if (r == 1) return boost::math::digamma(x);
  return boost::math::polygamma(r - 1, x);
}

double hermite(int n, double x) {
  double h0 = 1, h1 = 2 * x;
  if (n == 0) return h0;
  for (int k = 1; k < n; ++k) {
    double h2 = 2 * x * h1 - 2 * k * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

struct Poly {
  std::vector<double> c;  // c[k] x^k
  double eval(double x, int r) const {
    double s = 0;
    for (int k = static_cast<int>(c.size()) - 1; k >= r; --k) s = s * x + c[k] * falling(k, r);
    return s;
  }
};

Poly binomial_poly(int m) {
  Poly p{{1.0}};
  for (int i = 0; i < m; ++i) {
    std::vector<double> n(p.c.size() + 1, 0.0);
    for (std::size_t k = 0; k < p.c.size(); ++k) {
      n[k + 1] += p.c[k] / (i + 1);
      n[k] -= p.c[k] * i / (i + 1);
    }
    p.c = n;
  }
  return p;
}

// sum_{j=0}^n G_j C(x, n-j).
Poly gregory_poly(int n) {
  Poly p{std::vector<double>(n + 1, 0.0)};
  for (int j = 0; j <= n; ++j) {
    Poly b = binomial_poly(n - j);
    for (std::size_t k = 0; k < b.c.size(); ++k) p.c[k] += gregory_coeff(j) * b.c[k];
  }
  return p;
}

std::map<std::string, std::string> parse_params(const std::string& s) {
  std::map<std::string, std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw DomainError("malformed catalog parameter '" + item + "'");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

double param(const std::map<std::string, std::string>& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw DomainError("missing catalog parameter '" + key + "'");
  std::size_t used = 0;
  double v = std::stod(it->second, &used);
  if (used != it->second.size()) throw DomainError("bad catalog parameter '" + it->second + "'");
  return v;
}

int int_param(const std::map<std::string, std::string>& p, const std::string& key) {
  double v = param(p, key);
  if (v != std::floor(v)) throw DomainError("catalog parameter '" + key + "' must be an integer");
  return static_cast<int>(v);
}

CatalogEntry entry(std::string name, RealFn eval, std::function<double(double, int)> deriv, int p,
                   int sign, bool alternating, double onset, std::string tags, std::string closed,
                   RealFn oracle) {
  CatalogEntry e;
  e.name = name;
  e.g = make_function(std::move(name), std::move(eval), p, sign, onset, alternating);
  e.g.deriv = std::move(deriv);
  e.id_card = {p, std::move(tags), std::move(closed)};
  e.sum_oracle = std::move(oracle);
  return e;
}

// sum_{k>=0} [g(k+1) - g(x+k)] for rapidly decaying g.
double direct_sum(const RealFn& g, double x) {
  CompensatedSum s;
  for (int k = 0; k < 100000; ++k) {
    double a = g(k + 1.0), b = g(x + k);
    s.add(a - b);
    if (std::abs(a) + std::abs(b) < 1e-20 * (1 + std::abs(s.value())) && k > 4) break;
  }
  return s.value();
}

CatalogEntry build(const std::string& full) {
  auto colon = full.find(':');
  std::string fam = full.substr(0, colon);
  auto P = colon == std::string::npos ? std::map<std::string, std::string>{} : parse_params(full.substr(colon + 1));
  const std::string& N = full;

  if (fam == "log")
    return entry(N, [](double x) { return std::log(x); }, [](double x, int r) { return dlog_affine(1, 0, x, r); },
                 1, -1, true, 1, "K^1_-, alternating", "lnGamma(x)", [](double x) { return std::lgamma(x); });
  if (fam == "reciprocal") {
    auto e = entry(N, [](double x) { return 1 / x; }, [](double x, int r) { return sgn_pow(r) * fact(r) / std::pow(x, r + 1); },
                   0, -1, true, 1, "K^0_-, alternating, odd", "digamma(x) + gamma",
                   [](double x) { return boost::math::digamma(x) + kEulerGamma; });
    e.g.extension = DomainExtension::punctured_reals;
    return e;
  }
  if (fam == "log-abs") {
    auto e = entry(N, [](double x) { return std::log(std::abs(x)); }, [](double x, int r) {
                     return r == 0 ? std::log(std::abs(x)) : sgn_pow(r - 1) * fact(r - 1) / std::pow(x, r); },
                   1, -1, true, 1, "K^1_-, alternating, even", "ln|Gamma(x)|", [](double x) { return std::lgamma(x); });
    e.g.extension = DomainExtension::punctured_reals;
    return e;
  }
  if (fam == "polygamma") {
    int nu = int_param(P, "nu");
    if (nu >= 1) {
      double c = sgn_pow(nu) * fact(nu);
      auto e = entry(N, [c, nu](double x) { return c / std::pow(x, nu + 1); },
                     [c, nu](double x, int r) { return c * falling(-nu - 1.0, r) * std::pow(x, -nu - 1.0 - r); },
                     0, nu % 2 ? 1 : -1, true, 1, "K^0, summable, alternating", "psi_nu(x) - psi_nu(1)",
                     [nu](double x) { return boost::math::polygamma(nu, x) - boost::math::polygamma(nu, 1.0); });
      e.g.summable = true;
      return e;
    }
    if (nu == 0) {
      auto e = build("reciprocal");
      e.name = e.g.name = N;
      e.g.extension = DomainExtension::positive_only;
      return e;
    }
    if (nu == -1) {
      auto e = build("log");
      e.name = e.g.name = N;
      return e;
    }
    if (nu == -2)
      return entry(N, [](double x) { return 0.5 * kLn2Pi + x * std::log(x) - x; },
                   [](double x, int r) { return r == 0 ? 0.5 * kLn2Pi + x * std::log(x) - x : r == 1 ? std::log(x) : dxlogx(x, r); },
                   2, -1, true, 1, "K^2_-, alternating", "psi_{-2}(x) - psi_{-2}(1)",
                   [](double x) { return psi_minus2(x) - 0.5 * kLn2Pi; });
    if (nu == -3)
      return entry(N, [](double x) {
                     return 0.5 * x * x * std::log(x) - 0.75 * x * x + 0.5 * kLn2Pi * x + kLnGlaisher + 0.25 * kLn2Pi; },
                   [](double x, int r) {
                     if (r == 0) return 0.5 * x * x * std::log(x) - 0.75 * x * x + 0.5 * kLn2Pi * x + kLnGlaisher + 0.25 * kLn2Pi;
                     if (r == 1) return x * std::log(x) - x + 0.5 * kLn2Pi;
                     if (r == 2) return std::log(x);
                     return dxlogx(x, r - 1); },
                   3, -1, true, 1, "K^3_-, alternating", "psi_{-3}(x) - psi_{-3}(1)",
                   [](double x) { return psi_minus3(x) - psi_minus3(1.0); });
    throw DomainError("polygamma: nu must be in -3..3 or positive");
  }
  if (fam == "qgamma") {
    double q = param(P, "q");
    if (!(q > 0 && q < 1)) throw DomainError("qgamma: only 0 < q < 1");
    double lq = std::log(q), l1q = std::log1p(-q);
    auto d = [q, lq, l1q](double x, int r) {
      if (r == 0) return std::log1p(-std::pow(q, x)) - l1q;
      // ln(1 - q^x) = -sum_m q^{mx}/m
      CompensatedSum s;
      for (int m = 1; m < 100000; ++m) {
        double t = std::pow(m * lq, r) * std::pow(q, m * x) / m;
        s.add(-t);
        if (std::abs(t) < 1e-18 * std::abs(s.value())) break;
      }
      return s.value();
    };
    return entry(N, [q, l1q](double x) { return std::log1p(-std::pow(q, x)) - l1q; }, d, 1, -1, true, 1,
                 "K^1_-, alternating", "ln Gamma_q(x)", [q](double x) { return ln_qgamma(q, x); });
  }
  if (fam == "barnesG")
    return entry(N, [](double x) { return std::lgamma(x); }, lgamma_deriv, 2, -1, true, 1, "K^2_-, alternating",
                 "ln G(x)", [](double x) { return barnes_lnG(x); });
  if (fam == "hurwitz") {
    double s = param(P, "s");
    if (s == 1) throw DomainError("hurwitz: s = 1 is a pole");
    int p = std::max(0, static_cast<int>(std::floor(1 - s)));
    // sign of g^{(p+1)} for g = -x^{-s}
    int sign = -falling(-s, p + 1) > 0 ? 1 : -1;
    auto e = entry(N, [s](double x) { return -std::pow(x, -s); },
                   [s](double x, int r) { return -falling(-s, r) * std::pow(x, -s - r); }, p, sign, true, 1,
                   "K^" + std::to_string(p) + ", alternating", "zeta(s,x) - zeta(s)",
                   [s](double x) { return hurwitz_zeta(s, x) - hurwitz_zeta(s, 1.0); });
    e.g.summable = s > 1;
    return e;
  }
  if (fam == "stieltjes") {
    int q = int_param(P, "q");
    if (q == 0)
      return entry(N, [](double x) { return -1 / x; }, [](double x, int r) { return -sgn_pow(r) * fact(r) / std::pow(x, r + 1); },
                   0, 1, true, 1, "K^0_+, alternating", "-digamma(x) - gamma",
                   [](double x) { return -boost::math::digamma(x) - kEulerGamma; });
    if (q == 1)
      return entry(N, [](double x) { return -std::log(x) / x; },
                   [](double x, int r) {
                     double H = 0;
                     for (int i = 1; i <= r; ++i) H += 1.0 / i;
                     return -sgn_pow(r) * fact(r) * (std::log(x) - H) / std::pow(x, r + 1); },
                   0, 1, true, 10, "K^0_+, alternating past e^{H_5}", "gamma_1(x) - gamma_1",
                   [](double x) { return stieltjes1(x) - stieltjes1(1.0); });
    throw DomainError("stieltjes: only q in {0, 1}");
  }
  if (fam == "hurwitz-derivative") {
    if (param(P, "s") != 0 || param(P, "q") != 1) throw DomainError("hurwitz-derivative: only (s,q) = (0,1)");
    auto e = build("log");
    e.name = e.g.name = N;
    e.id_card.closed_form = "zeta'(0,x) - zeta'(0)";
    e.sum_oracle = [](double x) { return hurwitz_zeta_ds(0.0, x) - hurwitz_zeta_ds(0.0, 1.0); };
    return e;
  }
  if (fam == "catalan")
    return entry(N, [](double x) { return std::log(2 * (2 * x + 1) / (x + 2)); },
                 [](double x, int r) {
                   if (r == 0) return std::log(2 * (2 * x + 1) / (x + 2));
                   return dlog_affine(2, 1, x, r) - dlog_affine(1, 2, x, r); },
                 1, -1, true, 1, "K^1_-, alternating", "ln C_x",
                 [](double x) { return std::lgamma(2 * x + 1) - std::lgamma(x + 1) - std::lgamma(x + 2); });
  if (fam == "psi-sum")
    return entry(N, [](double x) { return boost::math::digamma(x); }, [](double x, int r) { return lgamma_deriv(x, r + 1); },
                 1, -1, true, 1, "K^1_-, alternating", "(x-1)(digamma(x)-1)",
                 [](double x) { return (x - 1) * (boost::math::digamma(x) - 1); });
  if (fam == "zeta2") {
    int s = int_param(P, "s");
    if (s < 3) throw DomainError("zeta2: need integer s >= 3");
    // zeta(s, x) = (-1)^s psi^{(s-1)}(x) / (s-1)!
    double c = sgn_pow(s) / fact(s - 1);
    auto e = entry(N, [s, c](double x) { return c * boost::math::polygamma(s - 1, x); },
                   [s, c](double x, int r) { return c * boost::math::polygamma(s - 1 + r, x); }, 0, -1, true, 1,
                   "K^0_-, summable, alternating", "(x-1)zeta(s,x) - zeta(s-1,x) + zeta(s-1)",
                   [s](double x) {
                     return (x - 1) * hurwitz_zeta(s, x) - hurwitz_zeta(s - 1, x) + hurwitz_zeta(s - 1, 1.0); });
    e.g.summable = true;
    return e;
  }
  if (fam == "gregory-gf") {
    if (int_param(P, "p") != 1) throw DomainError("gregory-gf: only p = 1");
    auto e = entry(N, [](double x) { return x / std::log1p(x); }, nullptr, 1, -1, true, 1, "K^1_-, alternating",
                   "tau_1 - int_0^1 zeta(s-1, x+1) ds", [](double x) {
                     auto z = [x](double s) { return hurwitz_zeta(s - 1, x + 1); };
                     auto z1 = [](double s) { return hurwitz_zeta(s - 1, 1.0); };
                     double tau = -1 + integrate(z1, 0.0, 1.0, 1e-14);
                     return tau - integrate(z, 0.0, 1.0, 1e-14 * (1 + x * x));
                   });
    return e;
  }
  if (fam == "hyperfactorial")
    return entry(N, [](double x) { return x * std::log(x); },
                 [](double x, int r) { return r == 0 ? x * std::log(x) : dxlogx(x, r); }, 2, -1, true, 1,
                 "K^2_-, alternating", "zeta'(-1,x) - zeta'(-1)",
                 [](double x) { return hurwitz_zeta_ds(-1.0, x) - hurwitz_zeta_ds(-1.0, 1.0); });
  if (fam == "bernoulli-poly") {
    int n = int_param(P, "n");
    if (n < 1 || n > 20) throw DomainError("bernoulli-poly: need 1 <= n <= 20");
    return entry(N, [n](double x) { return n * std::pow(x, n - 1); },
                 [n](double x, int r) { return r > n - 1 ? 0.0 : n * falling(n - 1.0, r) * std::pow(x, n - 1 - r); },
                 n, 1, true, 1, "polynomial", "B_n(x) - B_n(1)",
                 [n](double x) { return bernoulli_poly(n, x) - bernoulli_poly(n, 1.0); });
  }
  if (fam == "bernoulli-2nd-kind") {
    int n = int_param(P, "n");
    if (n < 1 || n > 12) throw DomainError("bernoulli-2nd-kind: need 1 <= n <= 12");
    Poly g = gregory_poly(n), S = gregory_poly(n + 1);
    return entry(N, [g](double x) { return g.eval(x, 0); }, [g](double x, int r) { return g.eval(x, r); }, n + 1, 1,
                 true, 1, "polynomial", "psi_{n+1}(x) - psi_{n+1}(1)",
                 [S](double x) { return S.eval(x, 0) - S.eval(1.0, 0); });
  }
  if (fam == "erf") {
    const double c = 2 / std::sqrt(kPi);
    auto g = [c](double x) { return c * std::exp(-x * x); };
    auto e = entry(N, g, [c](double x, int r) { return c * sgn_pow(r) * hermite(r, x) * std::exp(-x * x); }, 0, -1,
                   true, 3, "K^0_-, summable, alternating past 3", "sum_k [g(k+1) - g(x+k)]",
                   [g](double x) { return direct_sum(g, x); });
    e.g.summable = true;
    return e;
  }
  if (fam == "expint") {
    auto g = [](double x) { return std::exp(-x) / x; };
    auto d = [](double x, int r) {
      CompensatedSum s;
      double binom = 1;
      for (int k = 0; k <= r; ++k) {
        s.add(binom * sgn_pow(r - k) * sgn_pow(k) * fact(k) / std::pow(x, k + 1));
        binom = binom * (r - k) / (k + 1);
      }
      return s.value() * std::exp(-x);
    };
    auto e = entry(N, g, d, 0, -1, true, 1, "K^0_-, summable, alternating", "sum_k [g(k+1) - g(x+k)]",
                   [g](double x) { return direct_sum(g, x); });
    e.g.summable = true;
    return e;
  }
  if (fam == "one")
    return entry(N, [](double) { return 1.0; }, [](double, int r) { return r == 0 ? 1.0 : 0.0; }, 1, 1, true, 1,
                 "polynomial", "x - 1", [](double x) { return x - 1; });
  if (fam == "identity")
    return entry(N, [](double x) { return x; }, [](double x, int r) { return r == 0 ? x : r == 1 ? 1.0 : 0.0; }, 2, 1,
                 true, 1, "polynomial", "x(x-1)/2", [](double x) { return x * (x - 1) / 2; });
  if (fam == "integral-log")
    return entry(N, [](double x) { return x * std::log(x) - x + 1; },
                 [](double x, int r) { return r == 0 ? x * std::log(x) - x + 1 : r == 1 ? std::log(x) : dxlogx(x, r); },
                 2, -1, true, 1, "K^2_-, alternating", "(1 - ln(2pi)/2)(x-1) + int_1^x lnGamma",
                 [](double x) { return (1 - 0.5 * kLn2Pi) * (x - 1) + psi_minus2(x) - 0.5 * kLn2Pi; });
  if (fam == "arctan")
    return entry(N, [](double x) { return std::atan(x); },
                 [](double x, int r) {
                   if (r == 0) return std::atan(x);
                   return sgn_pow(r - 1) * fact(r - 1) * std::sin(r * std::atan(1 / x)) / std::pow(1 + x * x, r / 2.0); },
                 1, -1, true, 4, "K^1_-, alternating past 4", "(pi/2)(x-1) + Im lnGamma(1+i) - Im lnGamma(x+i)",
                 [](double x) {
                   return kPi / 2 * (x - 1) + lngamma_complex({1, 1}).imag() - lngamma_complex({x, 1}).imag(); });
  if (fam == "scaled-ln") {
    int n = P.count("n") ? int_param(P, "n") : 20;
    if (n < 2) throw DomainError("scaled-ln: need n >= 2");
    double c = kPi / (n - 1);
    return entry(N, [c, n](double x) { return c * std::log(c * (x + n - 2)); },
                 [c, n](double x, int r) { return r == 0 ? c * std::log(c * (x + n - 2)) : c * dlog_affine(1, n - 2, x, r); },
                 1, -1, true, 1, "K^1_-, alternating", "c((x-1)ln c + lnGamma(x+n-2) - lnGamma(n-1))",
                 [c, n](double x) { return c * ((x - 1) * std::log(c) + std::lgamma(x + n - 2) - std::lgamma(n - 1.0)); });
  }
  throw DomainError("unknown catalog name '" + full + "'");
}

std::mutex g_mu;
std::string g_path_override;
std::map<std::string, std::vector<Golden>>* g_table = nullptr;

const std::map<std::string, std::vector<Golden>>& golden_table() {
  std::lock_guard<std::mutex> lock(g_mu);
  if (!g_table) {
    g_table = new std::map<std::string, std::vector<Golden>>();
    std::string path = g_path_override;
    if (path.empty()) {
      const char* env = std::getenv("ISUM_GOLDENS");
      path = env && *env ? env : ISUM_GOLDENS_DEFAULT;
    }
    std::ifstream probe(path);
    if (probe) {
      for (auto& [name, gold] : load_goldens(path)) (*g_table)[name].push_back(gold);
    }
  }
  return *g_table;
}

}  // namespace

double hurwitz_zeta(double s, double a) {
  if (!(a > 0)) throw DomainError("hurwitz_zeta: a must be positive");
  if (s == 1) throw DomainError("hurwitz_zeta: pole at s = 1");
  return hurwitz_em(s, a);
}

double hurwitz_zeta_ds(double s, double a) {
  if (!(a > 0)) throw DomainError("hurwitz_zeta_ds: a must be positive");
  return value_of(hurwitz_em(Dual{s, 1.0}, a));
}

double psi_minus2(double x) {
  return x * (1 - x) / 2 + x / 2 * kLn2Pi + hurwitz_zeta_ds(-1.0, x) - hurwitz_zeta_ds(-1.0, 1.0);
}

double psi_minus3(double x) { return integrate(psi_minus2, 0.0, x, 1e-14 * (1 + x * x * x)); }

double barnes_lnG(double x) {
  return -x * (x - 1) / 2 + (x - 1) * std::lgamma(x) + 0.5 * kLn2Pi * x - psi_minus2(x);
}

double stieltjes1(double x) {
  const int N = std::max(0, static_cast<int>(std::ceil(30.0 - x)));
  CompensatedSum s;
  for (int k = 0; k < N; ++k) s.add(std::log(x + k) / (x + k));
  const double y = x + N, L = std::log(y);
  s.add(-L * L / 2);
  s.add(0.5 * L / y);
  double H = 0;
  for (int j = 1; j <= 12; ++j) {
    int n = 2 * j - 1;
    for (int i = (n == 1 ? 1 : n - 1); i <= n; ++i) H += 1.0 / i;
    double dn = -fact(n) * (L - H) / std::pow(y, n + 1);  // (-1)^n n!(ln y - H_n)/y^{n+1}, n odd
    s.add(-bernoulli_number(2 * j) / fact(2 * j) * dn);
  }
  return s.value();
}

double ln_qgamma(double q, double x) {
  if (!(q > 0 && q < 1)) throw DomainError("ln_qgamma: need 0 < q < 1");
  CompensatedSum s;
  s.add((1 - x) * std::log1p(-q));
  for (int k = 0; k < 100000; ++k) {
    double t = std::log1p(-std::pow(q, k + 1.0)) - std::log1p(-std::pow(q, k + x));
    s.add(t);
    if (std::abs(t) < 1e-19 && k > 4) break;
  }
  return s.value();
}

std::complex<double> lngamma_complex(std::complex<double> z) {
  if (!(z.real() > 0)) throw DomainError("lngamma_complex: need Re z > 0");
  std::complex<double> acc = 0;
  while (z.real() < 15) {
    acc += std::log(z);
    z += 1.0;
  }
  std::complex<double> r = (z - 0.5) * std::log(z) - z + 0.5 * kLn2Pi;
  std::complex<double> zi = 1.0 / z, zi2 = zi * zi, pw = zi;
  for (int k = 1; k <= 10; ++k) {
    r += bernoulli_number(2 * k) / (2.0 * k * (2 * k - 1)) * pw;
    pw *= zi2;
  }
  return r - acc;
}

CatalogEntry catalog_lookup(const std::string& name) {
  CatalogEntry e = build(name);
  const auto& table = golden_table();
  auto it = table.find(name);
  if (it != table.end()) e.golden = it->second;
  return e;
}

std::vector<std::string> catalog_names() {
  return {"log", "reciprocal", "polygamma:nu=-3", "polygamma:nu=-2", "polygamma:nu=-1", "polygamma:nu=0",
          "polygamma:nu=1", "polygamma:nu=2", "polygamma:nu=3", "qgamma:q=0.5", "barnesG", "hurwitz:s=-1.5",
          "hurwitz:s=0.5", "hurwitz:s=2", "stieltjes:q=0", "stieltjes:q=1", "hurwitz-derivative:s=0,q=1",
          "catalan", "psi-sum", "zeta2:s=3", "gregory-gf:p=1", "hyperfactorial", "bernoulli-poly:n=2",
          "bernoulli-poly:n=3", "bernoulli-2nd-kind:n=1", "bernoulli-2nd-kind:n=2", "erf", "expint", "one",
          "identity", "integral-log", "arctan", "log-abs", "scaled-ln:n=20"};
}

double oracle_eval(const std::string& name, double x) {
  if (name == "lgamma") return std::lgamma(x);
  if (name == "digamma") return boost::math::digamma(x);
  if (name == "trigamma") return boost::math::trigamma(x);
  if (name == "psi_minus2") return psi_minus2(x);
  if (name == "psi_minus3") return psi_minus3(x);
  if (name == "barnes_lnG") return barnes_lnG(x);
  if (name == "stieltjes1") return stieltjes1(x);
  if (name.rfind("sum:", 0) == 0) {
    CatalogEntry e = build(name.substr(4));
    if (!e.sum_oracle) throw DomainError("no closed form for '" + name.substr(4) + "'");
    return e.sum_oracle(x);
  }
  throw DomainError("unknown oracle '" + name + "'");
}

std::vector<std::pair<std::string, Golden>> load_goldens(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open golden table '" + path + "'");
  std::vector<std::pair<std::string, Golden>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, '\t')) f.push_back(cell);
    if (f.size() < 3) throw DomainError(path + ":" + std::to_string(lineno) + ": expected 4 tab-separated fields");
    Golden g;
    std::string tag = f[1];
    if (auto t = tag.find('~'); t != std::string::npos) {
      g.tol = std::stod(tag.substr(t + 1));
      tag = tag.substr(0, t);
    }
    if (auto at = tag.find('@'); at != std::string::npos) {
      g.x = std::stod(tag.substr(at + 1));
      tag = tag.substr(0, at);
    }
    g.tag = tag;
    g.value = std::stod(f[2]);
    g.citation = f.size() > 3 ? f[3] : "";
    out.emplace_back(f[0], g);
  }
  return out;
}

void set_goldens_path(const std::string& path) {
  std::lock_guard<std::mutex> lock(g_mu);
  g_path_override = path;
  delete g_table;
  g_table = nullptr;
}

std::string goldens_path() {
  std::lock_guard<std::mutex> lock(g_mu);
  if (!g_path_override.empty()) return g_path_override;
  const char* env = std::getenv("ISUM_GOLDENS");
  return env && *env ? env : ISUM_GOLDENS_DEFAULT;
}

std::vector<VerifyRow> verify_entry(const std::string& name, std::chrono::milliseconds budget) {
  const auto start = std::chrono::steady_clock::now();
  CatalogEntry e = catalog_lookup(name);
  const double tol = 1e-10;
  std::vector<VerifyRow> rows;
  for (const Golden& gd : e.golden) {
    VerifyRow r{name, gd.tag, gd.x, gd.value, 0, 0, gd.tol, false, ""};
    if (std::chrono::steady_clock::now() - start > budget) {
      r.note = "budget exhausted";
      rows.push_back(r);
      continue;
    }
    try {
      if (gd.tag == "sigma") {
        ConstantEstimate c = sigma_constant(e.g, SigmaMethod::raabe_integral, tol);
        r.got = c.value;
        r.bound = c.error_estimate;
      } else if (gd.tag == "gamma") {
        ConstantEstimate c = euler_constant(e.g, tol);
        r.got = c.value;
        r.bound = c.error_estimate;
      } else if (gd.tag == "sigmabar") {
        auto c = sigma_bar(e.g, tol);
        if (!c) throw RefusedError("sigma_bar undefined");
        r.got = c->value;
        r.bound = c->error_estimate;
      } else if (gd.tag == "sum" && gd.x) {
        SigmaResult s = *gd.x > 0 ? sigma_eval(e.g, *gd.x, tol) : sigma_extend(e.g, *gd.x, tol);
        r.got = s.value;
        r.bound = s.certified() ? s.error_bound : INFINITY;
      } else if (gd.tag == "raabe" && gd.x) {
        double worst = 0;
        auto f = [&](double t) {
          SigmaResult s = sigma_eval(e.g, t, tol / 4);
          worst = std::max(worst, s.error_bound);
          return s.value;
        };
        IntegralResult ir = integrate_ex(f, *gd.x, *gd.x + 1, tol / 2);
        r.got = ir.value;
        r.bound = ir.error + worst;
      } else if (gd.tag == "deriv1" && gd.x) {
        SigmaResult s = sigma_derivative(e.g, 1, *gd.x, tol);
        r.got = s.value;
        r.bound = s.certified() ? s.error_bound : INFINITY;
      } else {
        throw DomainError("unknown golden tag '" + gd.tag + "'");
      }
      r.pass = std::abs(r.got - r.expected) <= r.bound + r.tol;
      if (!r.pass) r.note = "outside bound";
    } catch (const std::exception& ex) {
      r.note = ex.what();
    }
    rows.push_back(r);
  }
  return rows;
}

}  // namespace isum
