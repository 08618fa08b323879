#pragma once

#include <functional>

#include "vswap/kernels.hpp"
#include "vswap/params.hpp"

namespace vswap {

// Model-agnostic discrete strike: sums the seven-term per-interval
// expectation of the squared log return over the grid, with single
// integrals by Gauss-Legendre and double integrals by the tensorized
// rule, refined through orders {8, 16, 32, 64} until two successive
// orders agree to the relative tolerance.  Throws NoConvergence when
// the refinement stalls at the top order and KernelFailure when a
// kernel callable throws.
double generic_discrete_strike(const ModelKernels& k, const SwapSpec& spec,
                               double tol = 1e-10);

// Remark-2.1 decomposition of the rate dependence: for fixed non-rate
// inputs, K_d(r) = b(n) - (T/n) K_c r + (T/n) r^2.
struct RateStructure {
  double b_of_n = 0.0;      // K_d at r = 0
  double k_c = 0.0;         // continuous strike reference
  double critical_rate = 0.0;  // r* = K_c / 2, the minimizing rate
  double dt = 0.0;          // T / n

  double reconstruct(double r) const { return b_of_n + dt * (r - k_c) * r; }
  double sensitivity(double r) const { return dt * (2.0 * r - k_c); }
};

// Extracts b(n) = price_at(0) and verifies the quadratic reconstruction
// at two probe rates to 1e-10 relative; StructureViolation on failure.
RateStructure rate_structure(const std::function<double(double)>& price_at,
                             const SwapSpec& spec, double k_c);

// Closed-form strike dispatch over the model variant.
double discrete_strike(const ModelParams& p, const SwapSpec& spec);
double continuous_strike(const ModelParams& p, double maturity);

// Signed gap K_d - K_c; `negative` marks the convex-order-violation
// regime (possible only for positive correlation or r > 0).
struct GapReport {
  double k_d = 0.0;
  double k_c = 0.0;
  double gap = 0.0;
  bool negative = false;
};

GapReport convex_order_gap(const ModelParams& p, const SwapSpec& spec);

}  // namespace vswap
