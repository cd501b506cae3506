#pragma once

#include <chrono>
#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "isum/gmodel.hpp"

namespace isum {

// Named oracle constants.
inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kLnGlaisher = 0.24875447703378426255;  // ln A, zeta'(-1) = 1/12 - ln A
inline constexpr double kLn2Pi = 1.8378770664093454836;

struct Golden {
  std::string tag;            // quantity: sigma, gamma, sigmabar, sum, raabe, deriv1
  std::optional<double> x;    // argument for sum/raabe/deriv1
  double value = 0;
  std::string citation;
  double tol = 1e-9;          // acceptance tolerance on top of the reported bound
};

struct IdCard {
  int degree = 0;
  std::string tags;         // membership, e.g. "K^1_-, alternating"
  std::string closed_form;  // description of Sigma g
};

struct CatalogEntry {
  std::string name;
  AdmissibleFunction g;
  IdCard id_card;
  std::vector<Golden> golden;
  RealFn sum_oracle;  // independent closed form of Sigma g, empty if none
};

// Parses "family" or "family:key=value,...". Throws DomainError for unknown names.
CatalogEntry catalog_lookup(const std::string& name);
// Registry names with goldens.
std::vector<std::string> catalog_names();

// Independent reference values: lgamma, digamma, trigamma, psi_minus2, psi_minus3,
// barnes_lnG, stieltjes1, or "sum:<catalog name>" for the closed form of Sigma g.
double oracle_eval(const std::string& name, double x);

// Golden table: tab-separated name, tag[@x][~tol], value, citation.
std::vector<std::pair<std::string, Golden>> load_goldens(const std::string& path);
// --goldens, then ISUM_GOLDENS, then the path compiled in.
void set_goldens_path(const std::string& path);
std::string goldens_path();

struct VerifyRow {
  std::string name;
  std::string tag;
  std::optional<double> x;
  double expected = 0;
  double got = 0;
  double bound = 0;
  double tol = 0;
  bool pass = false;
  std::string note;
};
std::vector<VerifyRow> verify_entry(const std::string& name,
                                    std::chrono::milliseconds budget = std::chrono::seconds(120));

// Oracle building blocks, written independently of the summation engine.
double hurwitz_zeta(double s, double a);
double hurwitz_zeta_ds(double s, double a);  // d/ds zeta(s, a)
double psi_minus2(double x);                 // int_0^x lnGamma
double psi_minus3(double x);                 // int_0^x psi_minus2
double barnes_lnG(double x);
double stieltjes1(double x);                 // generalized Stieltjes constant gamma_1(x)
double ln_qgamma(double q, double x);
std::complex<double> lngamma_complex(std::complex<double> z);

}  // namespace isum
