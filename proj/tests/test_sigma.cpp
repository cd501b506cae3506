#include <gtest/gtest.h>

#include <cmath>

#include "isum/catalog.hpp"
#include "isum/errors.hpp"
#include "isum/sigma.hpp"
#include "oracle/frozen_values.hpp"

using namespace isum;

namespace {
AdmissibleFunction ln_g() { return catalog_lookup("log").g; }
}  // namespace

TEST(Sigma, HalfIsHalfLnPi) {
  SigmaResult r = sigma_eval(ln_g(), 0.5, 1e-10);
  EXPECT_TRUE(r.certified());
  EXPECT_LE(r.error_bound, 1e-10);
  EXPECT_NEAR(r.value, frozen::kHalfLnPi, r.error_bound);
}

TEST(Sigma, NormalizationIsExact) {
  for (const auto& name : catalog_names()) {
    SigmaResult r = sigma_eval(catalog_lookup(name).g, 1.0, 1e-10);
    EXPECT_EQ(r.value, 0.0) << name;
    EXPECT_EQ(r.error_bound, 0.0) << name;
  }
}

TEST(Sigma, IntegersAreFiniteSums) {
  AdmissibleFunction g = ln_g();
  EXPECT_NEAR(sigma_at_integers(g, 6), std::log(120.0), 1e-13);
  EXPECT_NEAR(sigma_eval(g, 6.0, 1e-10).value, std::log(120.0), 1e-13);
}

TEST(Sigma, LargeArgumentsReduce) {
  SigmaResult r = sigma_eval(ln_g(), 37.25, 1e-10);
  EXPECT_NEAR(r.value, std::lgamma(37.25), 1e-9);
}

TEST(Sigma, ReciprocalIsDigammaPlusGamma) {
  AdmissibleFunction g = catalog_lookup("reciprocal").g;
  for (double x : {0.25, 1.5, 7.0}) {
    SigmaResult r = sigma_eval(g, x, 1e-10);
    EXPECT_NEAR(r.value, oracle_eval("digamma", x) + frozen::kEuler, r.error_bound + 1e-13) << x;
  }
}

TEST(Sigma, SummableSplit) {
  AdmissibleFunction g = catalog_lookup("polygamma:nu=1").g;
  ASSERT_TRUE(g.summable);
  SigmaResult r = sigma_eval_summable(g, 0.5, 1e-10);
  EXPECT_EQ(r.bound_kind, BoundKind::summable_tail);
  EXPECT_NEAR(r.value, oracle_eval("sum:polygamma:nu=1", 0.5), r.error_bound + 1e-12);
}

TEST(Sigma, ExtensionThroughPoles) {
  AdmissibleFunction g = catalog_lookup("log-abs").g;
  SigmaResult r = sigma_extend(g, -0.5, 1e-10);
  double lg = std::lgamma(-0.5);
  EXPECT_NEAR(r.value, lg, r.error_bound + 1e-12);
  EXPECT_THROW(sigma_extend(g, -2.0, 1e-10), DomainError);
}

TEST(Sigma, DerivativeIsDigamma) {
  AdmissibleFunction g = ln_g();
  for (double x : {0.5, 2.0, 4.5}) {
    SigmaResult r = sigma_derivative(g, 1, x, 1e-10);
    EXPECT_NEAR(r.value, oracle_eval("digamma", x), r.error_bound + 1e-9) << x;
  }
  SigmaResult t = sigma_derivative(g, 2, 1.5, 1e-10);
  EXPECT_NEAR(t.value, oracle_eval("trigamma", 1.5), t.error_bound + 1e-8);
}

TEST(Sigma, RhoAndFnp) {
  AdmissibleFunction g = ln_g();
  EXPECT_NEAR(rho(g, 1, 3.0, 0.5), std::log(3.5 / 3), 1e-15);
  EXPECT_NEAR(rho(g, 2, 3.0, 0.5), std::log(3.5 / 3) - 0.5 * std::log(4.0 / 3.0), 1e-15);
  double f = f_np(g, 1, 1 << 12, 0.5);
  EXPECT_NEAR(f, frozen::kHalfLnPi, 1e-3);
}

TEST(Sigma, RejectsNonPositiveOnHalfLine) {
  EXPECT_THROW(sigma_eval(ln_g(), -0.5, 1e-10), DomainError);
  EXPECT_THROW(sigma_eval(ln_g(), 0.0, 1e-10), DomainError);
}

TEST(Sigma, BoundKindNames) {
  EXPECT_STREQ(to_string(BoundKind::wendel_tight), "wendel_tight");
  EXPECT_STREQ(to_string(BoundKind::uncertified), "uncertified");
}
