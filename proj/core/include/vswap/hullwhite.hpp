#pragma once

#include "vswap/params.hpp"

namespace vswap {

// K_c = V0 (e^{mu T} - 1) / (mu T), continued with V0 at mu = 0.
double hw_continuous_strike(const HullWhiteParams& p, double maturity);

// Closed-form discrete fair strike; affine in rho.  sigma = 0 falls back
// to the exact deterministic-variance expression (valid through mu = 0).
// Throws DegenerateParameter when mu+sigma^2 or 4mu+3sigma^2 vanishes
// with a non-vanishing numerator.
double hw_discrete_strike(const HullWhiteParams& p, const SwapSpec& spec);

// Fractional moment E[V_s^a] = V0^a e^{a mu s} e^{(a^2-a) sigma^2 s / 2}.
double hw_moment(const HullWhiteParams& p, double a, double s);

// E[V_s^a V_u^b] for any ordering of s, u (GBM joint lognormal moments).
double hw_cross_moment(const HullWhiteParams& p, double a, double s, double b,
                       double u);

// The four cross moments for s <= u plus the single-time moments.
struct HwMoments {
  double ev_s;         // E[V_s]
  double ev_u;         // E[V_u]
  double e_sqrt_s;     // E[sqrt(V_s)]
  double e_sqrt_u;     // E[sqrt(V_u)]
  double vv;           // E[V_s V_u]
  double sqrt_sqrt;    // E[sqrt(V_s) sqrt(V_u)]
  double sqrt_v;       // E[sqrt(V_s) V_u]
  double v_sqrt;       // E[V_s sqrt(V_u)]
};

HwMoments hw_moments(const HullWhiteParams& p, double s, double u);

// Var(V_T) = V0^2 e^{2 mu T} (e^{sigma^2 T} - 1).
double hw_variance_of_vt(const HullWhiteParams& p, double t);

// Calibrate (mu, sigma) so the Hull-White continuous strike and Var(V_T)
// match the given Heston model at maturity T; rho and V0 copied through.
HullWhiteParams hw_match_params(const HestonParams& h, double maturity);

}  // namespace vswap
