#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include "isum/catalog.hpp"
#include "isum/errors.hpp"
#include "isum/sigma.hpp"
#include "oracle/frozen_values.hpp"

using namespace isum;

TEST(Catalog, NamedConstants) {
  EXPECT_NEAR(kEulerGamma, frozen::kEuler, 1e-15);
  EXPECT_NEAR(kLnGlaisher, frozen::kLnGlaisher, 1e-15);
  EXPECT_NEAR(kLn2Pi, 2 * frozen::kSigmaLog + 2, 1e-15);
}

TEST(Catalog, UnknownNamesThrow) {
  EXPECT_THROW(catalog_lookup("no-such"), DomainError);
  EXPECT_THROW(catalog_lookup("hurwitz:s=1"), DomainError);
  EXPECT_THROW(catalog_lookup("polygamma:nu"), DomainError);
}

TEST(Catalog, EveryEntryHasGoldens) {
  for (const auto& name : catalog_names()) EXPECT_FALSE(catalog_lookup(name).golden.empty()) << name;
}

TEST(Catalog, VerifyEveryEntry) {
  for (const auto& name : catalog_names())
    for (const auto& row : verify_entry(name))
      EXPECT_TRUE(row.pass) << name << " " << row.tag << " got " << row.got << " expected " << row.expected
                            << " bound " << row.bound << " " << row.note;
}

TEST(Catalog, HurwitzOracle) {
  EXPECT_NEAR(hurwitz_zeta(2, 1), M_PI * M_PI / 6, 1e-14);
  EXPECT_NEAR(hurwitz_zeta(2, 0.5), M_PI * M_PI / 2, 1e-13);
  EXPECT_NEAR(hurwitz_zeta(-1.5, 1), frozen::kZetaMinus1p5, 1e-12);
  EXPECT_NEAR(hurwitz_zeta_ds(-1, 1), 1.0 / 12 - frozen::kLnGlaisher, 1e-12);
}

TEST(Catalog, IntegratedGammaOracles) {
  EXPECT_NEAR(psi_minus2(0.5), frozen::kPsiMinus2Half, 1e-12);
  EXPECT_NEAR(psi_minus2(1), 0.5 * kLn2Pi, 1e-12);
  EXPECT_NEAR(barnes_lnG(2), 0, 1e-12);
  EXPECT_NEAR(barnes_lnG(3), 0, 1e-12);
  EXPECT_NEAR(barnes_lnG(4), std::log(2.0), 1e-12);
  EXPECT_NEAR(stieltjes1(1), frozen::kStieltjes1, 1e-12);
}

TEST(Catalog, ComplexLogGamma) {
  auto z = lngamma_complex({0.5, 0});
  EXPECT_NEAR(z.real(), frozen::kHalfLnPi, 1e-13);
  EXPECT_NEAR(z.imag(), 0, 1e-13);
  // |Gamma(1 + i)|^2 = pi / sinh(pi)
  EXPECT_NEAR(2 * lngamma_complex({1, 1}).real(), std::log(M_PI / std::sinh(M_PI)), 1e-12);
}

TEST(Catalog, QGammaTendsToProduct) {
  EXPECT_NEAR(ln_qgamma(0.5, 1), 0, 1e-14);
  EXPECT_NEAR(ln_qgamma(0.5, 2), 0, 1e-14);
  EXPECT_NEAR(ln_qgamma(0.5, 3), std::log(1.5), 1e-13);
}

TEST(Catalog, EngineMatchesClosedForms) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> U(0.05, 20);
  for (const auto& name : catalog_names()) {
    CatalogEntry e = catalog_lookup(name);
    if (!e.sum_oracle) continue;
    int bad = 0;
    for (int i = 0; i < 50; ++i) {
      double x = U(rng);
      SigmaResult r = sigma_eval(e.g, x, 1e-9);
      double ref = e.sum_oracle(x);
      if (!(std::abs(r.value - ref) <= r.error_bound + 1e-12 * (1 + std::abs(ref)))) ++bad;
    }
    EXPECT_EQ(bad, 0) << name;
  }
}

TEST(Catalog, GoldensFileParsesTolerances) {
  std::string path = ::testing::TempDir() + "goldens_test.tsv";
  {
    std::ofstream f(path);
    f << "# comment\n";
    f << "log\tsigma\t-0.0810614667953272\tRaabe\n";
    f << "log\tsum@0.5~1e-6\t0.572364942924700\thalf\n";
  }
  auto rows = load_goldens(path);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1].second.tag, "sum");
  ASSERT_TRUE(rows[1].second.x.has_value());
  EXPECT_DOUBLE_EQ(*rows[1].second.x, 0.5);
  EXPECT_DOUBLE_EQ(rows[1].second.tol, 1e-6);
  std::remove(path.c_str());
}

TEST(Catalog, AnalyticDerivativesMatchFiniteDifferences) {
  for (const auto& name : catalog_names()) {
    AdmissibleFunction g = catalog_lookup(name).g;
    if (!g.deriv) continue;
    for (double x : {1.5, 2.5, 6.0})
      for (int r = 1; r <= 3; ++r) {
        if (!g.has_analytic_derivative(r)) continue;
        double a = g.deriv(x, r), n = numeric_derivative(g.eval, x, r);
        EXPECT_NEAR(a, n, 1e-4 * (1 + std::abs(a))) << name << " x=" << x << " r=" << r;
      }
  }
}
