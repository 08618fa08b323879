#include "vswap/hullwhite.hpp"

#include <cmath>

#include "vswap/errors.hpp"
#include "vswap/heston.hpp"
#include "vswap/numerics.hpp"

namespace vswap {

double hw_continuous_strike(const HullWhiteParams& p, double maturity) {
  return p.v0 * phi(p.mu * maturity);
}

double hw_discrete_strike(const HullWhiteParams& p, const SwapSpec& spec) {
  const double T = spec.maturity;
  const double n = static_cast<double>(spec.periods);
  const double r = spec.rate;
  const double mu = p.mu, sigma = p.sigma, rho = p.rho, v0 = p.v0;

  const double kc = hw_continuous_strike(p, T);
  const double rate_part = r * r * T / n + (1.0 - r * T / n) * kc;

  if (sigma == 0.0) {
    // Deterministic variance path V0 e^{mu s}; exact through mu = 0.
    const double x = mu * T / n;
    const double quad = v0 * v0 * phi(2.0 * mu * T) * (T / (2.0 * n)) *
                        phi_ratio_diff(2.0, 1.0, x) / phi(2.0 * x);
    return rate_part + quad;
  }

  const double s2 = sigma * sigma;
  const double a = 2.0 * mu + s2;
  const double b = 3.0 * (4.0 * mu + s2) / 8.0;
  if (std::abs(mu + s2) < 1e-12) {
    throw DegenerateParameter("mu + sigma^2 vanishes with non-vanishing numerator");
  }
  if (rho != 0.0 && std::abs(4.0 * mu + 3.0 * s2) < 1e-12) {
    throw DegenerateParameter("4mu + 3sigma^2 vanishes with non-vanishing numerator");
  }

  const double v32 = v0 * std::sqrt(v0);
  const double t3 =
      -v0 * v0 * phi(a * T) * phi(mu * T / n) / (2.0 * (mu + s2) * phi(a * T / n));
  const double t4 = v0 * v0 * phi(a * T) / (2.0 * (mu + s2));
  const double t5 = 8.0 * rho * sigma * v32 * phi(b * T) * phi(mu * T / n) /
                    ((4.0 * mu + 3.0 * s2) * phi(b * T / n));
  const double t6 = -8.0 * rho * sigma * v32 * phi(b * T) / (4.0 * mu + 3.0 * s2);

  return rate_part + t3 + t4 + t5 + t6;
}

double hw_moment(const HullWhiteParams& p, double a, double s) {
  return std::pow(p.v0, a) *
         std::exp(a * p.mu * s + 0.5 * (a * a - a) * p.sigma * p.sigma * s);
}

double hw_cross_moment(const HullWhiteParams& p, double a, double s, double b,
                       double u) {
  if (s > u) {
    std::swap(s, u);
    std::swap(a, b);
  }
  // E[V_s^{a+b}] * E[(V_u / V_s)^b] by independence of GBM increments.
  const double tail =
      std::exp(b * p.mu * (u - s) + 0.5 * (b * b - b) * p.sigma * p.sigma * (u - s));
  return hw_moment(p, a + b, s) * tail;
}

HwMoments hw_moments(const HullWhiteParams& p, double s, double u) {
  if (s > u) throw OrderViolation("requires s <= u");
  HwMoments m;
  m.ev_s = hw_moment(p, 1.0, s);
  m.ev_u = hw_moment(p, 1.0, u);
  m.e_sqrt_s = hw_moment(p, 0.5, s);
  m.e_sqrt_u = hw_moment(p, 0.5, u);
  m.vv = hw_cross_moment(p, 1.0, s, 1.0, u);
  m.sqrt_sqrt = hw_cross_moment(p, 0.5, s, 0.5, u);
  m.sqrt_v = hw_cross_moment(p, 0.5, s, 1.0, u);
  m.v_sqrt = hw_cross_moment(p, 1.0, s, 0.5, u);
  return m;
}

double hw_variance_of_vt(const HullWhiteParams& p, double t) {
  return p.v0 * p.v0 * std::exp(2.0 * p.mu * t) *
         std::expm1(p.sigma * p.sigma * t);
}

HullWhiteParams hw_match_params(const HestonParams& h, double maturity) {
  if (h.v0 <= 0.0) {
    throw DegenerateParameter("matching requires V0 > 0");
  }
  const double kc_target = heston_continuous_strike(h, maturity);
  // phi(mu T) is strictly increasing in mu, so the solve is monotone.
  const double mu = solve_bracketed(
      [&](double m) { return h.v0 * phi(m * maturity) - kc_target; }, -50.0, 50.0);

  const double var_target = heston_variance_of_vt(h, maturity);
  const double s2 = std::log1p(var_target /
                               (h.v0 * h.v0 * std::exp(2.0 * mu * maturity))) /
                    maturity;
  HullWhiteParams out;
  out.mu = mu;
  out.sigma = std::sqrt(std::max(s2, 0.0));
  out.rho = h.rho;
  out.v0 = h.v0;
  return out;
}

}  // namespace vswap
