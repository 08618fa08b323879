#pragma once

#include <stdexcept>
#include <string>

namespace vswap {

// Base class for all numerical/domain failures raised by the pricers.
class PricingError : public std::runtime_error {
 public:
  explicit PricingError(const std::string& msg) : std::runtime_error(msg) {}
};

// A parameter combination puts a closed form outside its stable
// evaluation region (e.g. kappa*T below the floor, vanishing denominator).
class DegenerateParameter : public PricingError {
 public:
  using PricingError::PricingError;
};

// Inputs violate the validity domain of a formula (Zhu-Lian conditions).
class ValidityDomain : public PricingError {
 public:
  using PricingError::PricingError;
};

// A complex-arithmetic evaluation produced a non-negligible imaginary part.
class NonRealMgf : public PricingError {
 public:
  using PricingError::PricingError;
};

// Time arguments passed out of order (s > t where s <= t is required).
class OrderViolation : public PricingError {
 public:
  using PricingError::PricingError;
};

// The 1-D root bracket for the matching solve does not contain a root.
class RootNotBracketed : public PricingError {
 public:
  using PricingError::PricingError;
};

// Adaptive quadrature stalled before reaching the requested tolerance.
class NoConvergence : public PricingError {
 public:
  using PricingError::PricingError;
};

// A user-supplied kernel callable threw; wrapped and propagated.
class KernelFailure : public PricingError {
 public:
  using PricingError::PricingError;
};

// The quadratic-in-r reconstruction failed; indicates a pricer bug.
class StructureViolation : public PricingError {
 public:
  using PricingError::PricingError;
};

// The critical correlation is undefined (rho-slope of a1 vanishes).
class IndeterminateRho0 : public PricingError {
 public:
  using PricingError::PricingError;
};

// Monte Carlo work paths*substeps*n exceeds the configured budget.
class BudgetExceeded : public PricingError {
 public:
  using PricingError::PricingError;
};

}  // namespace vswap
