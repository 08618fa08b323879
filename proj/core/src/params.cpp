#include "vswap/params.hpp"

#include <cmath>
#include <sstream>

namespace vswap {

namespace {

bool finite(double x) { return std::isfinite(x); }

void check_rho(double rho, ValidationReport& rep) {
  if (!finite(rho) || rho < -1.0 || rho > 1.0) {
    rep.violations.push_back("rho out of [-1,1]");
  }
}

void validate_model(const HestonParams& p, ValidationReport& rep) {
  if (!finite(p.kappa) || p.kappa <= 0.0) rep.violations.push_back("kappa must be > 0");
  if (!finite(p.theta) || p.theta < 0.0) rep.violations.push_back("theta must be >= 0");
  if (!finite(p.gamma) || p.gamma < 0.0) rep.violations.push_back("gamma must be >= 0");
  check_rho(p.rho, rep);
  if (!finite(p.v0) || p.v0 < 0.0) rep.violations.push_back("v0 must be >= 0");
  if (rep.violations.empty()) {
    if (p.gamma > 0.0 && p.alpha() < 0.0) {
      std::ostringstream os;
      os << "2*kappa*theta/gamma^2 - 1 = " << p.alpha()
         << " < 0: simple-return (Zhu-Lian) pricer unavailable";
      rep.warnings.push_back(os.str());
    }
    if (p.v0 == 0.0) {
      rep.warnings.push_back("v0 = 0: formulas remain finite but this case is untested territory");
    }
  }
}

void validate_model(const HullWhiteParams& p, ValidationReport& rep) {
  if (!finite(p.mu)) rep.violations.push_back("mu must be finite");
  if (!finite(p.sigma) || p.sigma < 0.0) rep.violations.push_back("sigma must be >= 0");
  check_rho(p.rho, rep);
  // V0^{3/2} and sqrt(V0) appear in the closed forms.
  if (!finite(p.v0) || p.v0 <= 0.0) rep.violations.push_back("v0 must be > 0");
  if (rep.violations.empty() && p.mu < -0.5 * p.sigma * p.sigma) {
    rep.warnings.push_back("mu < -sigma^2/2 is outside the tested region of the discrete formula");
  }
}

void validate_model(const SchobelZhuParams& p, ValidationReport& rep) {
  if (!finite(p.kappa) || p.kappa <= 0.0) rep.violations.push_back("kappa must be > 0");
  if (!finite(p.theta) || p.theta < 0.0) rep.violations.push_back("theta must be >= 0");
  if (!finite(p.gamma) || p.gamma < 0.0) rep.violations.push_back("gamma must be >= 0");
  check_rho(p.rho, rep);
  if (!finite(p.v0) || p.v0 < 0.0) rep.violations.push_back("v0 must be >= 0");
}

}  // namespace

ModelKind model_kind(const ModelParams& p) {
  if (std::holds_alternative<HestonParams>(p)) return ModelKind::Heston;
  if (std::holds_alternative<HullWhiteParams>(p)) return ModelKind::HullWhite;
  return ModelKind::SchobelZhu;
}

std::string model_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::Heston: return "heston";
    case ModelKind::HullWhite: return "hull-white";
    case ModelKind::SchobelZhu: return "schobel-zhu";
  }
  return "unknown";
}

ValidationReport validate(const ModelParams& params, const SwapSpec& spec) {
  ValidationReport rep;
  std::visit([&rep](const auto& p) { validate_model(p, rep); }, params);

  if (!finite(spec.maturity) || spec.maturity <= 0.0) rep.violations.push_back("T must be > 0");
  if (spec.periods < 1) rep.violations.push_back("n must be >= 1");
  // The source material assumes r >= 0; negative rates are rejected.
  if (!finite(spec.rate) || spec.rate < 0.0) rep.violations.push_back("r must be >= 0");

  // Moment condition E[int m^4(V_s) ds] < infty: finite for all three
  // models, so it never fails; kept as an explicit note.
  return rep;
}

}  // namespace vswap
