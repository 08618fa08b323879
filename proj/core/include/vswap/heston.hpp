#pragma once

#include "vswap/params.hpp"

namespace vswap {

// Drift-adjustment constants from the proof decomposition of the
// discrete strike; kept for proof-path cross-checks, the displayed
// closed form does not use them.
struct HestonAux {
  double a;  // r - rho*kappa*theta/gamma
  double b;  // rho*kappa/gamma - 1/2
};

HestonAux heston_aux(const HestonParams& p, double rate);

// K_c = theta + (1 - e^{-kappa T}) (V0 - theta) / (kappa T).
double heston_continuous_strike(const HestonParams& p, double maturity);

// Closed-form discrete fair strike (log-return realized variance,
// equidistant grid).  Exactly affine in rho and quadratic in gamma.
double heston_discrete_strike(const HestonParams& p, const SwapSpec& spec);

// Fair strike of the swap on squared *simple* returns.  Requires
// alpha = 2 kappa theta / gamma^2 - 1 >= 0 and gamma^2 T < 1.
// The result is dimensionless; multiply by 1e4 for the conventional
// quotation of the reference numbers.
double heston_simple_return_strike(const HestonParams& p, const SwapSpec& spec,
                                   double spot);

struct HestonMoments {
  double mean;      // E[V_t]
  double cross;     // E[V_t V_s], s <= t (valid at s = t)
  double variance;  // Var(V_t)
};

// CIR moment kernels; requires 0 <= s <= t.
HestonMoments heston_variance_moments(const HestonParams& p, double t, double s);

// E[V_s V_u] for arbitrary order of s and u.
double heston_cross_moment(const HestonParams& p, double s, double u);

// Var(V_T) = gamma^2/(2 kappa) (theta + 2 e^{-kT}(V0-theta) + e^{-2kT}(theta-2V0)).
double heston_variance_of_vt(const HestonParams& p, double t);

}  // namespace vswap
