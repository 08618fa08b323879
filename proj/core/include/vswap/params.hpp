#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace vswap {

// Heston: dV = kappa*(theta - V) dt + gamma*sqrt(V) dW2, m(v) = sqrt(v).
// V models the instantaneous *variance*.
struct HestonParams {
  double kappa = 0.0;  // mean-reversion speed (1/time)
  double theta = 0.0;  // long-run variance level
  double gamma = 0.0;  // volatility of variance
  double rho = 0.0;    // correlation in [-1, 1]
  double v0 = 0.0;     // initial variance

  // Feller-type quantity 2*kappa*theta/gamma^2 - 1; needed by the
  // simple-return pricer, negative values only trigger a warning.
  double alpha() const { return 2.0 * kappa * theta / (gamma * gamma) - 1.0; }

  bool operator==(const HestonParams&) const = default;
};

// Hull-White: dV = mu*V dt + sigma*V dW2 (GBM variance), m(v) = sqrt(v).
struct HullWhiteParams {
  double mu = 0.0;     // drift of variance (any sign)
  double sigma = 0.0;  // volatility of variance
  double rho = 0.0;    // correlation in [-1, 1]
  double v0 = 0.0;     // initial variance (> 0)

  bool operator==(const HullWhiteParams&) const = default;
};

// Schobel-Zhu: dV = kappa*(theta - V) dt + gamma dW2, m(v) = v.
// V models the *volatility*, not the variance; the API never auto-squares.
struct SchobelZhuParams {
  double kappa = 0.0;  // mean-reversion speed
  double theta = 0.0;  // long-run volatility level
  double gamma = 0.0;  // volatility of volatility
  double rho = 0.0;    // correlation in [-1, 1]
  double v0 = 0.0;     // initial volatility

  bool operator==(const SchobelZhuParams&) const = default;
};

using ModelParams = std::variant<HestonParams, HullWhiteParams, SchobelZhuParams>;

enum class ModelKind { Heston, HullWhite, SchobelZhu };

ModelKind model_kind(const ModelParams& p);
std::string model_name(ModelKind kind);

// Swap contract with equidistant sampling grid t_i = i*T/n.
struct SwapSpec {
  double maturity = 1.0;  // T in years, > 0
  int periods = 1;        // n sampling intervals, >= 1
  double rate = 0.0;      // continuously compounded risk-free rate, >= 0

  double dt() const { return maturity / periods; }

  bool operator==(const SwapSpec&) const = default;
};

enum class StrikeMethod { ClosedForm, Quadrature, MonteCarlo };

// A fair-strike value in annualized variance units with provenance.
struct StrikeQuote {
  double value = 0.0;
  StrikeMethod method = StrikeMethod::ClosedForm;
  ModelKind model = ModelKind::Heston;
  SwapSpec spec;
  double std_error = 0.0;  // only meaningful for MonteCarlo quotes
};

// Report-style validation: hard violations plus soft warnings.
struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;

  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const ModelParams& params, const SwapSpec& spec);

}  // namespace vswap
