#pragma once

#include <functional>

#include "vswap/params.hpp"

namespace vswap {

// Moment kernels driving the generic per-interval pricing engine.
// Conventions: m1(s) = E[m^2(V_s)]; m2(s,u) = E[m^2(V_s) m^2(V_u)];
// m3(s,u) = E[h(V_s) h(V_u)]; m4(s,u) = E[h(V_s) m^2(V_u)] (no symmetry
// assumed); m5(t, delta, s) = E[(f(V_{t+delta}) - f(V_t)) (2 rho h(V_s)
// + m^2(V_s))]; f_increment_sq(t, delta) = E[(f(V_{t+delta}) - f(V_t))^2].
// Integrability of the kernels is the supplier's obligation; the engine
// only requires finiteness on the grid.  Callables must be safe for
// concurrent invocation.
struct ModelKernels {
  std::function<double(double)> m1;
  std::function<double(double, double)> m2;
  std::function<double(double, double)> m3;
  std::function<double(double, double)> m4;
  std::function<double(double, double, double)> m5;
  std::function<double(double, double)> f_increment_sq;
  double rho = 0.0;
};

// Exact kernel suppliers built from each model's moment formulas.  A
// vanishing volatility-of-volatility degenerates to the deterministic
// kernel set (stochastic terms zero, rho irrelevant).
ModelKernels heston_kernels(const HestonParams& p);
ModelKernels hullwhite_kernels(const HullWhiteParams& p);
ModelKernels schobelzhu_kernels(const SchobelZhuParams& p);

// Constant variance theta: m1 = theta, m2 = theta^2, everything else 0.
ModelKernels constant_variance_kernels(double theta);

ModelKernels model_kernels(const ModelParams& p);

}  // namespace vswap
