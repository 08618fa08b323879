#pragma once

#include "vswap/params.hpp"

namespace vswap {

// K_c in closed form (integrated OU second moment).
double sz_continuous_strike(const SchobelZhuParams& p, double maturity);

// Discrete fair strike assembled from OU moment kernels.  Every kernel
// is a finite sum of exponentials, so each per-interval single and
// double integral is evaluated analytically; the result carries no
// quadrature error.
double sz_discrete_strike(const SchobelZhuParams& p, const SwapSpec& spec);

// Single-time and cross moments of the OU volatility process.
struct OuMoments {
  double mean_s;     // e_s = E[V_s]
  double var_s;      // v(s)
  double m1;         // E[V_s]
  double m2;         // E[V_s^2]
  double m3;         // E[V_s^3]
  double m4;         // E[V_s^4]
  double vv;         // E[V_s V_u]
  double v2v2;       // E[V_s^2 V_u^2]
  double vv2;        // E[V_s V_u^2]
  double v2v;        // E[V_s^2 V_u]
};

// Requires 0 <= s <= u.
OuMoments ou_moments(const SchobelZhuParams& p, double s, double u);

}  // namespace vswap
