// Acceptance checks. Usage: acceptance <k> [property-test binary for k = 10].
// Prints one PASS/FAIL line per criterion; tolerances are fixed below.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "isum/asym.hpp"
#include "isum/catalog.hpp"
#include "isum/cli.hpp"
#include "isum/gregquad.hpp"
#include "isum/identities.hpp"
#include "isum/numerics.hpp"
#include "isum/sigma.hpp"
#include "oracle/frozen_values.hpp"

using namespace isum;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int report(int k, bool pass, const std::string& what) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", k, what.c_str());
  return pass ? 0 : 1;
}

// CSV value column of the first data row printed by the CLI.
double cli_value(const std::vector<std::string>& args, int* code) {
  std::ostringstream out, err;
  *code = cli::run(args, out, err);
  std::istringstream in(out.str());
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  std::istringstream cells(row);
  std::string x, v;
  std::getline(cells, x, ',');
  std::getline(cells, v, ',');
  return v.empty() ? NAN : std::strtod(v.c_str(), nullptr);
}

// Raabe constant through the CLI, three further methods in agreement, under 5 s.
int criterion1() {
  const double kTolRaabe = 1e-9, kTolAgree = 1e-7, kMaxSeconds = 5;
  auto t0 = Clock::now();
  int code = 0;
  double raabe = cli_value({"const", "--g", "log", "--method", "raabe", "--format", "csv"}, &code);
  bool pass = code == 0 && std::abs(raabe - frozen::kSigmaLog) <= kTolRaabe;
  std::printf("  raabe %.15f  exact %.15f  exit %d\n", raabe, frozen::kSigmaLog, code);
  AdmissibleFunction g = catalog_lookup("log").g;
  for (SigmaMethod m : {SigmaMethod::stirling_limit, SigmaMethod::gregory_series, SigmaMethod::euler_maclaurin}) {
    ConstantEstimate c = sigma_constant(g, m, 1e-10);
    bool ok = std::abs(c.value - raabe) <= kTolAgree;
    std::printf("  %-16s %.15f  diff %.2e\n", to_string(m), c.value, c.value - raabe);
    pass = pass && ok;
  }
  double t = seconds_since(t0);
  std::printf("  runtime %.3f s\n", t);
  pass = pass && t < kMaxSeconds;
  return report(1, pass, "sigma[ln] = -1 + ln(2 pi)/2 to 1e-9, methods agree to 1e-7, < 5 s");
}

// Gauss limit against an independent lnGamma at 50 random points.
int criterion2() {
  const double kMaxBound = 1e-8;
  const std::int64_t kMaxN = std::int64_t(1) << 20;
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> U(0.0, 20.0);
  AdmissibleFunction g = catalog_lookup("log").g;
  int within = 0, bound_ok = 0;
  const int total = 50;
  for (int i = 0; i < total; ++i) {
    double x = U(rng);
    while (x == 0) x = U(rng);
    SigmaResult r = sigma_eval(g, x, kMaxBound);
    double ref = oracle_eval("lgamma", x);
    if (std::abs(r.value - ref) <= r.error_bound) ++within;
    if (r.certified() && r.error_bound <= kMaxBound && r.n_used <= kMaxN) ++bound_ok;
  }
  std::printf("  within bound %d/%d, bound <= 1e-8 with n <= 2^20: %d/%d\n", within, total, bound_ok, total);
  bool pass = within >= 0.99 * total && bound_ok == total;
  return report(2, pass, "Gauss limit within reported bound at >= 99% of 50 points");
}

// Gregory quadrature example, checked against the printed figures.
int criterion3() {
  const double kPrintedValue = 4.809854526746, kPrintedTrue = 4.809854526737;
  const double kPrintedBound = 5.9e-11, kDigits = 5e-13, kMaxSeconds = 1;
  auto t0 = Clock::now();
  AdmissibleFunction g = catalog_lookup("scaled-ln:n=20").g;
  QuadratureResult r = gregory_sum(g, 1, 20, 10);
  double t = seconds_since(t0);
  bool value_ok = std::abs(r.value - kPrintedValue) <= kDigits;
  bool true_ok = std::abs(frozen::kGregoryTrue - kPrintedTrue) <= kDigits;
  bool bound_ok = r.remainder_bound <= kPrintedBound;
  std::printf("  computed %.13f  printed value %.12f  (diff %.1e)\n", r.value, kPrintedValue, r.value - kPrintedValue);
  std::printf("  reference integral %.13f  printed true %.12f  (diff %.1e)\n", frozen::kGregoryTrue, kPrintedTrue,
              frozen::kGregoryTrue - kPrintedTrue);
  std::printf("  remainder bound %.3e  printed %.1e  actual error %.2e  certified %d\n", r.remainder_bound,
              kPrintedBound, std::abs(r.value - frozen::kGregoryTrue), r.certified ? 1 : 0);
  for (int q = 9; q <= 12; ++q)
    std::printf("    q=%d bound %.3e\n", q, gregory_sum(g, 1, 20, q).remainder_bound);
  std::printf("  runtime %.4f s\n", t);
  bool pass = value_ok && true_ok && bound_ok && r.certified && t < kMaxSeconds;
  return report(3, pass, "(n,q)=(20,10) value 4.809854526746, true 4.809854526737, bound <= 5.9e-11, < 1 s");
}

// Gregory-coefficient series for gamma and for sigma[ln].
int criterion4() {
  // kRouteTol: the alternating binomial sums reach 1e11 at n = 39, so the two routes differ by rounding.
  const double kGammaTol = 2e-2, kLogTol = 1e-2, kRouteTol = 1e-7;
  double s = 0, prev_err = INFINITY;
  bool monotone = true;
  for (int n = 1; n <= 60; ++n) {
    double next = s + std::abs(gregory_coeff(n)) / n;
    double err = std::abs(frozen::kEuler - next);
    if (!(next > s) || !(next < frozen::kEuler) || !(err < prev_err)) monotone = false;
    s = next;
    prev_err = err;
  }
  std::printf("  sum_{n<=60} |G_n|/n = %.10f  gamma %.10f  error %.3e  monotone %d\n", s, frozen::kEuler, prev_err,
              monotone ? 1 : 0);
  bool gamma_ok = monotone && prev_err < kGammaTol;

  AdmissibleFunction g = catalog_lookup("log").g;
  double t = 0;
  for (int n = 0; n < 40; ++n) {
    CompensatedSum inner;
    for (int k = 0; k <= n; ++k) inner.add((k % 2 ? -1.0 : 1.0) * gen_binomial(n, k) * std::log(k + 1.0));
    t += std::abs(gregory_coeff(n + 1)) * inner.value();
  }
  double lib = gregory_series_partial(g, 40).back();
  double log_err = std::abs(t - frozen::kSigmaLog);
  std::printf("  log analogue after 40 terms %.10f  target %.10f  error %.3e  library partial sum %.10f\n", t,
              frozen::kSigmaLog, log_err, lib);
  bool log_ok = log_err < kLogTol && std::abs(lib - t) < kRouteTol;
  return report(4, gamma_ok && log_ok, "|G_n|/n series within 2e-2 of gamma, log analogue within 1e-2");
}

// Wendel double inequality and nested brackets.
int criterion5() {
  AdmissibleFunction g = catalog_lookup("log").g;
  int violations = 0;
  for (int k = 1; k <= 500; ++k) {
    double x = 0.1 * k;
    SigmaResult r = sigma_eval(g, x, 1e-12);
    double R = r.value - (0.5 * kLn2Pi - x + (x - 0.5) * std::log(x));
    double half = 0.5 * std::log1p(1 / x);
    if (!(-half <= R + r.error_bound && R - r.error_bound <= half)) ++violations;
    double Rref = oracle_eval("lgamma", x) - (0.5 * kLn2Pi - x + (x - 0.5) * std::log(x));
    if (!(-half <= Rref && Rref <= half)) ++violations;
  }
  std::printf("  double inequality violations on 0.1..50: %d\n", violations);
  bool nested = true;
  for (double x : {1.0, 2.0, 10.0}) {
    double half = 0.5 * std::log1p(1 / x);
    BoundPair outer{-half, half, "wendel", true};
    BoundPair c = bracket_refine(g, 1, x), e = webster_bounds(g, x);
    std::printf("  x=%-4g wendel [%.6f, %.6f]  r=1 [%.6f, %.6f]  webster [%.6f, %.6f]\n", x, -half, half, c.lower,
                c.upper, e.lower, e.upper);
    nested = nested && c.strictly_inside(outer) && e.strictly_inside(outer);
  }
  return report(5, violations == 0 && nested, "Wendel inequality on 500 points, brackets strictly nested");
}

// Stirling-type limits of zeta(-3/2, x).
int criterion6() {
  const double kLimitTol = 1e-6;
  AdmissibleFunction g = catalog_lookup("hurwitz:s=-1.5").g;
  double zeta = frozen::kZetaMinus1p5;
  const double ref1[] = {frozen::kHurwitzLimit1_1e1, frozen::kHurwitzLimit1_1e2, frozen::kHurwitzLimit1_1e3,
                         frozen::kHurwitzLimit1_1e4};
  const double ref2[] = {frozen::kHurwitzLimit2_1e1, frozen::kHurwitzLimit2_1e2, frozen::kHurwitzLimit2_1e3,
                         frozen::kHurwitzLimit2_1e4};
  double prev1 = INFINITY, prev2 = INFINITY;
  bool dec1 = true, dec2 = true;
  double last1 = 0, last2 = 0, last_bound = 0;
  for (int k = 1; k <= 4; ++k) {
    double x = std::pow(10.0, k);
    SigmaResult r = sigma_eval(g, x, 1e-9);
    double hz = r.value + zeta;  // Sigma g = zeta(s, x) - zeta(s)
    double l1 = hz + 0.4 * std::pow(x, 2.5) - 7.0 / 12 * std::pow(x, 1.5) + std::pow(x + 1, 1.5) / 12;
    double l2 = hz + 0.4 * std::pow(x, 2.5) - std::pow(x, 1.5) / 2 + std::sqrt(x) / 8;
    std::printf("  x=1e%d  first %.6e (ref %.6e)  second %.6e (ref %.6e)  bound %.1e\n", k, l1, ref1[k - 1], l2,
                ref2[k - 1], r.error_bound);
    dec1 = dec1 && std::abs(l1) < prev1;
    dec2 = dec2 && std::abs(l2) < prev2;
    prev1 = std::abs(l1);
    prev2 = std::abs(l2);
    last1 = l1;
    last2 = l2;
    last_bound = r.error_bound;
  }
  bool ok1 = dec1 && std::abs(last1) < kLimitTol + last_bound;
  bool ok2 = dec2 && std::abs(last2) < kLimitTol + last_bound;
  std::printf("  first limit below 1e-6: %d   second limit below 1e-6: %d\n", ok1 ? 1 : 0, ok2 ? 1 : 0);
  return report(6, ok1 && ok2, "both zeta(-3/2, x) limits decrease below 1e-6 by x = 1e4");
}

// Gauss multiplication and the psi_{-2}(1/2) value.
int criterion7() {
  const double kTol = 1e-9;
  AdmissibleFunction g = catalog_lookup("log").g;
  bool pass = true;
  for (int m : {2, 3})
    for (double x : {0.5, 1.0, 2.25}) {
      Estimate l = multiplication_lhs(g, m, x, 1e-11), r = multiplication_rhs(g, m, x, 1e-11);
      double closed = 0.5 * (m - 1) * kLn2Pi + (0.5 - x) * std::log(m) + oracle_eval("lgamma", x);
      bool ok = std::abs(l.value - r.value) <= kTol && std::abs(l.value - closed) <= kTol;
      std::printf("  m=%d x=%-4g lhs %.12f rhs %.12f closed %.12f\n", m, x, l.value, r.value, closed);
      pass = pass && ok;
    }
  AdmissibleFunction h = catalog_lookup("polygamma:nu=-2").g;
  double direct = sigma_eval(h, 0.5, 1e-11).value + 0.5 * kLn2Pi;
  double dup = multiplication_constant(h, 2, 1e-11).value + 0.5 * kLn2Pi;
  std::printf("  psi_{-2}(1/2): direct %.12f  duplication %.12f  closed %.12f\n", direct, dup, frozen::kPsiMinus2Half);
  pass = pass && std::abs(direct - frozen::kPsiMinus2Half) <= kTol && std::abs(dup - frozen::kPsiMinus2Half) <= kTol;
  return report(7, pass, "Gauss formula at m in {2,3} to 1e-9, psi_{-2}(1/2) to 1e-9");
}

// f(x) + f(x + a) = 1/x.
int criterion8() {
  const double kTol = 1e-9;
  AdmissibleFunction h = catalog_lookup("reciprocal").g;
  auto beta = [](double u) { return 0.5 * (oracle_eval("digamma", (u + 1) / 2) - oracle_eval("digamma", u / 2)); };
  bool pass = true;
  for (double a : {0.5, 1.0}) {
    WebsterProblem P{h, 2, a};
    for (double x : {0.5, 1.0, 2.0, 5.0}) {
      WebsterSolution s = webster_solve(P, x, 1e-11);
      double ref = a == 1.0 ? beta(x) : 2 * beta(2 * x);
      std::printf("  a=%-3g x=%-3g f %.12f  residual %.1e  vs beta-function oracle %.1e\n", a, x, s.value, s.residual,
                  s.value - ref);
      pass = pass && std::abs(s.residual) < kTol && std::abs(s.value - ref) < kTol;
    }
  }
  return report(8, pass, "Webster equation residual < 1e-9 for a in {0.5, 1}");
}

// Elevator from ln up to the integrated logarithm.
int criterion9() {
  const double kConstTol = 1e-9;
  AdmissibleFunction g = catalog_lookup("integral-log").g;
  bool pass = true;
  double shift = 0;
  for (int i = 0; i < 10; ++i) {
    double x = 0.5 + 0.75 * i;
    ElevatorResult e = elevator(g, 1, 1.0, x, 1e-10);
    SigmaResult d = sigma_eval(g, x, 1e-10);
    bool ok = std::abs(e.value - d.value) <= e.error + d.error_bound;
    if (!ok) std::printf("  x=%g elevator %.14f direct %.14f  tol %.1e\n", x, e.value, d.value, e.error + d.error_bound);
    pass = pass && ok;
    shift = e.shift_constant;
  }
  double c = 1 - 0.5 * kLn2Pi;
  std::printf("  recovered constant %.15f  expected %.15f\n", shift, c);
  pass = pass && std::abs(shift - c) <= kConstTol;
  return report(9, pass, "elevator matches sigma_eval on 10 points, c = 1 - ln(2 pi)/2 to 1e-9");
}

// The property suites, run as a child process and timed.
int criterion10(const char* binary) {
  const double kMaxSeconds = 180;
  if (!binary) return report(10, false, "property binary path missing");
  auto t0 = Clock::now();
  std::string cmd = std::string(binary) + " --gtest_brief=1";
  int rc = std::system(cmd.c_str());
  double t = seconds_since(t0);
  std::printf("  property suites exit %d, runtime %.1f s\n", rc, t);
  return report(10, rc == 0 && t < kMaxSeconds, "property suites green under a fixed seed, < 3 min");
}

}  // namespace

int main(int argc, char** argv) {
  std::setvbuf(stdout, nullptr, _IONBF, 0);
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <1..10> [property binary]\n");
    return 2;
  }
  switch (std::atoi(argv[1])) {
    case 1: return criterion1();
    case 2: return criterion2();
    case 3: return criterion3();
    case 4: return criterion4();
    case 5: return criterion5();
    case 6: return criterion6();
    case 7: return criterion7();
    case 8: return criterion8();
    case 9: return criterion9();
    case 10: return criterion10(argc > 2 ? argv[2] : nullptr);
  }
  std::fprintf(stderr, "unknown criterion %s\n", argv[1]);
  return 2;
}
