#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vswap/params.hpp"

namespace vswap {

// Large-n expansion K_d = K_c + a1/n + O(1/n^2).  a1 is affine in rho
// with a strictly negative slope; rho0 is the zero of a1 in rho, NaN
// when the slope vanishes (gamma = 0).
struct HestonExpansion {
  double a1 = 0.0;
  double c1 = 0.0;
  double rho_slope = 0.0;  // coefficient of rho inside a1
  double rho0 = 0.0;       // NaN when undefined
};

HestonExpansion heston_expansion_n(const HestonParams& p, double maturity,
                                   double rate);

// Throws IndeterminateRho0 when the rho-slope vanishes.
double heston_rho0(const HestonParams& p, double maturity, double rate);

// Small-maturity expansion K_d = V0 + b1 T + b2 T^2 + O(T^3); the gap
// K_d - K_c opens at rate gap_coeff * T.
struct SmallTExpansion {
  double b1 = 0.0;
  double b2 = 0.0;
  double gap_coeff = 0.0;
};

SmallTExpansion heston_smallT(const HestonParams& p, double rate, int n);

// Exact quadratic representation K_d = (h0 + h1 gamma + h2 gamma^2)
// / (8 n kappa^3 T); the gamma field of p is ignored.
struct HestonGammaPoly {
  double h0 = 0.0;
  double h1 = 0.0;
  double h2 = 0.0;
  double scale = 0.0;  // 1 / (8 n kappa^3 T)

  double eval(double gamma) const {
    return scale * (h0 + (h1 + h2 * gamma) * gamma);
  }
};

HestonGammaPoly heston_gamma_poly(const HestonParams& p, double maturity,
                                  double rate, int n);

// K_d = K_c + a1/n + a2/n^2 + a3/n^3 + O(1/n^4); rho0 > 0 at r = K_c/2.
struct HullWhiteExpansion {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
  double rho_slope = 0.0;
  double rho0 = 0.0;  // NaN when sigma = 0
};

HullWhiteExpansion hw_expansion_n(const HullWhiteParams& p, double maturity,
                                  double rate);

double hw_rho0(const HullWhiteParams& p, double maturity, double rate);

SmallTExpansion hw_smallT(const HullWhiteParams& p, double rate, int n);

// Leading sigma behavior K_d = h0 + h1 sigma + O(sigma^2); unlike the
// Heston gamma dependence this is not polynomial.  The sigma field of
// p is ignored.
struct HwSigmaExpansion {
  double h0 = 0.0;
  double h1 = 0.0;
};

HwSigmaExpansion hw_sigma_expansion(const HullWhiteParams& p, double maturity,
                                    double rate, int n);

// K_d = K_c + a1/n + O(1/n^2) with a1 = r^2 T - r T K_c + d1
// - d2 (gamma / 2 kappa) rho.  The sign of the rho-slope is not
// determined in general, so it is reported explicitly.
struct SchobelZhuExpansion {
  double a1 = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double big_d = 0.0;  // D = (e^{-kappa T} - 1) / kappa
  double big_e = 0.0;  // E = 4 V0^4 k^2 - 4 th^4 k^2 - 3 g^4 - 12 g^2 th^2 k
  double rho_slope = 0.0;
  bool slope_negative = false;
  double rho0 = 0.0;  // NaN when d2 * gamma = 0
};

SchobelZhuExpansion sz_expansion_n(const SchobelZhuParams& p, double maturity,
                                   double rate);

double sz_rho0(const SchobelZhuParams& p, double maturity, double rate);

// K_d = V0^2 + b1 T + O(T^2); only the first order is available.
struct SzSmallT {
  double b1 = 0.0;
  double gap_coeff = 0.0;
};

SzSmallT sz_smallT(const SchobelZhuParams& p, double rate, int n);

// Named-coefficient dump for reporting (CLI `expand`).
struct ExpansionReport {
  ModelKind model = ModelKind::Heston;
  std::vector<std::pair<std::string, double>> coefficients;
};

ExpansionReport expansion_report(const ModelParams& p, const SwapSpec& spec);

}  // namespace vswap
