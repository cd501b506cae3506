#include <gtest/gtest.h>

#include <cmath>

#include "isum/catalog.hpp"
#include "isum/errors.hpp"
#include "isum/identities.hpp"
#include "oracle/frozen_values.hpp"

using namespace isum;

namespace {
AdmissibleFunction ln_g() { return catalog_lookup("log").g; }
}  // namespace

TEST(Identities, MultiplicationConstantOfLog) {
  EXPECT_NEAR(multiplication_constant(ln_g(), 2, 1e-10).value, frozen::kHalfLnPi, 1e-9);
  // sum_{j=1}^{3} lnGamma(j/3) = ln(2 pi / sqrt 3)
  EXPECT_NEAR(multiplication_constant(ln_g(), 3, 1e-10).value, std::log(2 * M_PI / std::sqrt(3.0)), 1e-9);
}

TEST(Identities, GaussMultiplication) {
  for (int m : {2, 3})
    for (double x : {0.5, 1.0, 2.25}) {
      Estimate l = multiplication_lhs(ln_g(), m, x, 1e-11);
      Estimate r = multiplication_rhs(ln_g(), m, x, 1e-11);
      EXPECT_NEAR(l.value, r.value, l.error + r.error + 1e-12) << m << " " << x;
    }
}

TEST(Identities, WebsterReciprocal) {
  AdmissibleFunction h = catalog_lookup("reciprocal").g;
  for (double a : {0.5, 1.0}) {
    WebsterProblem P{h, 2, a};
    for (double x : {0.5, 1.0, 2.0, 5.0}) {
      WebsterSolution s = webster_solve(P, x, 1e-11);
      EXPECT_LT(std::abs(s.residual), 1e-9) << a << " " << x;
    }
  }
}

TEST(Identities, WallisLimitsShrink) {
  for (WallisVariant v : {WallisVariant::shift0, WallisVariant::shift1, WallisVariant::scale2}) {
    auto seq = wallis_limit(ln_g(), v, 40);
    ASSERT_EQ(seq.size(), 40u);
    EXPECT_LT(std::abs(seq.back()), std::abs(seq.front())) << to_string(v);
    EXPECT_LT(std::abs(seq.back()), 2e-2) << to_string(v);
  }
  EXPECT_EQ(parse_wallis_variant("scale2"), WallisVariant::scale2);
  EXPECT_THROW(parse_wallis_variant("nope"), DomainError);
}

TEST(Identities, ReflectionOfLog) {
  // lnGamma(x) + lnGamma(1-x) + ln sin(pi x) = ln pi
  AdmissibleFunction g = catalog_lookup("log-abs").g;
  Estimate e = reflection_periodic(g, Parity::even, 0.3, 1e-10);
  double expected = std::lgamma(0.3) + std::lgamma(0.7);
  EXPECT_NEAR(e.value, expected, e.error + 1e-8);
}

TEST(Identities, RationalArgument) {
  Estimate e = rational_argument(ln_g(), 3, 4, 1 << 16);
  EXPECT_NEAR(e.value, std::lgamma(0.75), e.error + 1e-9);
  AdmissibleFunction z2 = catalog_lookup("hurwitz:s=2").g;
  Estimate h = rational_argument(z2, 1, 2, 1 << 16);
  EXPECT_NEAR(h.value, M_PI * M_PI / 3, h.error + 1e-9);
}

TEST(Identities, GautschiChain) {
  for (double a : {0.25, 0.5, 0.75}) {
    GautschiResult r = gautschi_bounds(ln_g(), 2.0, a);
    EXPECT_LE(r.bounds.lower, r.target) << a;
    EXPECT_LE(r.target, r.bounds.upper) << a;
  }
}

TEST(Identities, ElevatorIntegralLog) {
  AdmissibleFunction g = catalog_lookup("integral-log").g;
  for (double x : {0.5, 2.0, 4.5}) {
    ElevatorResult e = elevator(g, 1, 1.0, x, 1e-10);
    SigmaResult d = sigma_eval(g, x, 1e-10);
    EXPECT_NEAR(e.value, d.value, e.error + d.error_bound + 1e-10) << x;
  }
  EXPECT_NEAR(elevator(g, 1, 1.0, 2.0, 1e-10).shift_constant, -frozen::kSigmaLog, 1e-9);
}

TEST(Identities, EulerSeriesOfLog) {
  SeriesResult s = euler_series_analogue(ln_g(), 40);
  EXPECT_NEAR(s.value + frozen::kEuler / 2, frozen::kEulerSeriesLog, 5 * std::abs(s.last_term) + 1e-6);
}
