#include "vswap/asymptotics.hpp"

#include <cmath>
#include <limits>

#include "vswap/errors.hpp"
#include "vswap/heston.hpp"
#include "vswap/hullwhite.hpp"
#include "vswap/numerics.hpp"
#include "vswap/schobelzhu.hpp"

namespace vswap {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

}  // namespace

HestonExpansion heston_expansion_n(const HestonParams& p, double maturity,
                                   double rate) {
  const double T = maturity, r = rate;
  const double kappa = p.kappa, theta = p.theta, gamma = p.gamma, v0 = p.v0;
  if (kappa <= 0.0) throw DegenerateParameter("requires kappa > 0");

  const double kc = heston_continuous_strike(p, T);
  const double emx = -std::expm1(-kappa * T);   // 1 - e^{-kT}
  const double em1 = std::expm1(-kappa * T);    // e^{-kT} - 1
  const double em2 = std::expm1(-2.0 * kappa * T);
  const double dv = v0 - theta;
  const double g2 = gamma * gamma;

  HestonExpansion e;
  e.c1 = ((g2 * theta - 2.0 * kappa * dv * dv) * em2 +
          2.0 * dv * em1 * (g2 * em1 - 4.0 * kappa * theta)) /
         (16.0 * kappa * kappa);
  e.rho_slope = gamma * (theta - v0) * emx / (2.0 * kappa) - theta * gamma * T / 2.0;
  const double rho_free =
      r * r * T - r * T * kc + (theta * theta / 4.0 + theta * g2 / (8.0 * kappa)) * T +
      e.c1;
  e.a1 = rho_free + e.rho_slope * p.rho;
  e.rho0 = e.rho_slope != 0.0 ? rho_free / -e.rho_slope : kNan;
  return e;
}

double heston_rho0(const HestonParams& p, double maturity, double rate) {
  const HestonExpansion e = heston_expansion_n(p, maturity, rate);
  if (!(e.rho_slope != 0.0)) {
    throw IndeterminateRho0("rho-slope of a1 vanishes (gamma = 0)");
  }
  return e.rho0;
}

SmallTExpansion heston_smallT(const HestonParams& p, double rate, int n) {
  const double r = rate;
  const double kappa = p.kappa, theta = p.theta, gamma = p.gamma, rho = p.rho,
               v0 = p.v0;
  SmallTExpansion e;
  e.gap_coeff = ((v0 - 2.0 * r) * (v0 - 2.0 * r) - 2.0 * rho * v0 * gamma) /
                (4.0 * n);
  e.b1 = kappa * (theta - v0) / 2.0 + e.gap_coeff;
  e.b2 = kappa * kappa * (v0 - theta) / 6.0 +
         ((v0 - theta) * kappa * (gamma * rho + 2.0 * r - v0) +
          gamma * gamma * v0 / 2.0) /
             (4.0 * n) +
         (gamma * rho * kappa * (v0 + theta) - gamma * gamma * v0 / 2.0) /
             (12.0 * n * n);
  return e;
}

HestonGammaPoly heston_gamma_poly(const HestonParams& p, double maturity,
                                  double rate, int n) {
  const double T = maturity, r = rate;
  const double kappa = p.kappa, theta = p.theta, v0 = p.v0;
  if (kappa * T / n < 1e-8) {
    throw DegenerateParameter("kappa*T/n below stable-evaluation floor");
  }
  const double x = kappa * T;
  const double y = x / n;
  const double em2x = std::expm1(-2.0 * x);  // e^{-2x} - 1
  const double emx = -std::expm1(-x);        // 1 - e^{-x}
  const double epy = std::expm1(y);          // e^{y} - 1
  const double dv = v0 - theta;
  const double k2 = kappa * kappa;
  const double nd = static_cast<double>(n);

  // (1 - e^{y})/(1 + e^{y}) and the cancellation-prone combinations
  // n(1 - e^{-y}) - x and n(1 - e^{-x}) + x(1 - e^{-x})/(1 - e^{y})
  // rewritten through expm1 so small y keeps full precision.
  const double tanh_factor = -epy / (2.0 + epy);
  const double n_emy_minus_x = -nd * (std::expm1(-y) + y);
  const double combo = emx * nd * (std::expm1(y) - y) / epy;

  HestonGammaPoly h;
  h.scale = 1.0 / (8.0 * nd * kappa * kappa * kappa * T);
  h.h0 = 2.0 * nd * kappa * dv * dv * em2x * tanh_factor +
         2.0 * x * (k2 * T * (theta - 2.0 * r) * (theta - 2.0 * r) +
                    4.0 * k2 * nd * theta) +
         4.0 * dv * (2.0 * k2 * nd + k2 * T * (theta - 2.0 * r)) * emx;
  h.h1 = 8.0 * p.rho * kappa * (nd * theta * n_emy_minus_x - dv * combo);
  // -2 n^2 theta (1 - e^{-y}) + 2 x n theta merged into one expm1 form.
  h.h2 = nd * (theta - 2.0 * v0) * em2x * tanh_factor +
         2.0 * nd * nd * theta * (std::expm1(-y) + y) + 4.0 * dv * combo;
  return h;
}

HullWhiteExpansion hw_expansion_n(const HullWhiteParams& p, double maturity,
                                  double rate) {
  const double T = maturity, r = rate;
  const double mu = p.mu, sigma = p.sigma, rho = p.rho, v0 = p.v0;
  const double s2 = sigma * sigma;
  const double v32 = v0 * std::sqrt(v0);
  const double kc = hw_continuous_strike(p, T);

  // F1 = (e^{(2mu+s2)T} - 1)/(2mu+s2), F2 = (e^{3(4mu+s2)T/8} - 1)/(4mu+s2);
  // both regular at vanishing denominators through phi.
  const double f1 = T * phi((2.0 * mu + s2) * T);
  const double f2 = (3.0 * T / 8.0) * phi(3.0 * (4.0 * mu + s2) * T / 8.0);

  HullWhiteExpansion e;
  const double rho_free = r * r * T - r * T * kc + v0 * v0 * f1 / 4.0;
  e.rho_slope = -4.0 * sigma * v32 * f2 / 3.0;
  e.a1 = rho_free + e.rho_slope * rho;
  e.a2 = -v0 * v0 * s2 * T * f1 / 24.0 -
         rho * v32 * sigma * T * (4.0 * mu - 3.0 * s2) * f2 / 36.0;
  e.a3 = -mu * T * T * v0 * v0 * (mu + s2) * f1 / 48.0 +
         mu * T * T * rho * sigma * v32 * (4.0 * mu + 3.0 * s2) * f2 / 72.0;
  e.rho0 = e.rho_slope != 0.0 ? rho_free / -e.rho_slope : kNan;
  return e;
}

double hw_rho0(const HullWhiteParams& p, double maturity, double rate) {
  const HullWhiteExpansion e = hw_expansion_n(p, maturity, rate);
  if (!(e.rho_slope != 0.0)) {
    throw IndeterminateRho0("rho-slope of a1 vanishes (sigma = 0)");
  }
  return e.rho0;
}

SmallTExpansion hw_smallT(const HullWhiteParams& p, double rate, int n) {
  const double r = rate;
  const double mu = p.mu, sigma = p.sigma, rho = p.rho, v0 = p.v0;
  const double s2 = sigma * sigma;
  const double sq = std::sqrt(v0);
  SmallTExpansion e;
  e.gap_coeff =
      ((v0 - 2.0 * r) * (v0 - 2.0 * r) - 2.0 * rho * v0 * sq * sigma) / (4.0 * n);
  e.b1 = v0 * mu / 2.0 + e.gap_coeff;
  e.b2 = v0 * mu * mu / 6.0 +
         v0 / (4.0 * n) *
             (s2 * v0 / 2.0 - 3.0 * rho * sq * sigma * (s2 + 4.0 * mu) / 8.0 +
              mu * (v0 - 2.0 * r)) +
         v0 * sq * sigma * (rho * (3.0 * s2 - 4.0 * mu) - 4.0 * sigma * sq) /
             (96.0 * n * n);
  return e;
}

HwSigmaExpansion hw_sigma_expansion(const HullWhiteParams& p, double maturity,
                                    double rate, int n) {
  const double T = maturity;
  const double mu = p.mu, rho = p.rho, v0 = p.v0;
  HullWhiteParams frozen = p;
  frozen.sigma = 0.0;
  SwapSpec spec{maturity, n, rate};

  HwSigmaExpansion e;
  e.h0 = hw_discrete_strike(frozen, spec);
  const double x = mu * T / n;
  e.h1 = -2.0 * rho * v0 * std::sqrt(v0) * phi(1.5 * mu * T) * (T / n) *
         phi_ratio_diff(1.5, 1.0, x) / phi(1.5 * x);
  return e;
}

SchobelZhuExpansion sz_expansion_n(const SchobelZhuParams& p, double maturity,
                                   double rate) {
  const double T = maturity, r = rate;
  const double kappa = p.kappa, theta = p.theta, gamma = p.gamma, v0 = p.v0;
  if (kappa <= 0.0) throw DegenerateParameter("requires kappa > 0");

  const double kc = sz_continuous_strike(p, T);
  const double g2 = gamma * gamma;
  const double g4 = g2 * g2;
  const double k2 = kappa * kappa;
  const double th2 = theta * theta;
  const double v02 = v0 * v0;
  const double v03 = v02 * v0;
  const double v04 = v02 * v02;

  SchobelZhuExpansion e;
  e.big_d = std::expm1(-kappa * T) / kappa;
  e.big_e = 4.0 * v04 * k2 - 4.0 * th2 * th2 * k2 - 3.0 * g4 - 12.0 * g2 * th2 * kappa;
  const double D = e.big_d, E = e.big_e;

  e.d1 = T * v04 / 4.0 - E * (T + D) / (16.0 * k2) +
         (3.0 * v02 * g2 / 4.0 + E / (32.0 * kappa) +
          kappa * v03 * (theta - v0) / 2.0) *
             D * D +
         (2.0 * theta * k2 * v03 / 3.0 - v04 * k2 / 6.0 - E / 48.0 -
          v02 * th2 * k2 / 2.0 - g2 * kappa * v0 * theta + 3.0 * v02 * kappa * g2 / 4.0 -
          g4 / 4.0) *
             D * D * D +
         (E / (8.0 * kappa) + 3.0 * g2 * (theta - v0) * theta + 3.0 * v02 * g2 / 2.0 +
          v0 * kappa * (theta - v0) * (2.0 * th2 - theta * v0 + v02)) *
             k2 * D * D * D * D / 8.0;
  e.d2 = T * (g2 + 2.0 * kappa * th2) + (2.0 * kappa * (th2 - v02) + g2) * D +
         kappa / 2.0 * (g2 - 2.0 * kappa * (theta - v0) * (theta - v0)) * D * D;

  e.rho_slope = -e.d2 * gamma / (2.0 * kappa);
  const double rho_free = r * r * T - r * T * kc + e.d1;
  e.a1 = rho_free + e.rho_slope * p.rho;
  e.slope_negative = e.rho_slope < 0.0;
  e.rho0 = e.rho_slope != 0.0 ? rho_free / -e.rho_slope : kNan;
  return e;
}

double sz_rho0(const SchobelZhuParams& p, double maturity, double rate) {
  const SchobelZhuExpansion e = sz_expansion_n(p, maturity, rate);
  if (!(e.rho_slope != 0.0)) {
    throw IndeterminateRho0("rho-slope of a1 vanishes (d2 * gamma = 0)");
  }
  return e.rho0;
}

SzSmallT sz_smallT(const SchobelZhuParams& p, double rate, int n) {
  const double r = rate;
  const double kappa = p.kappa, theta = p.theta, gamma = p.gamma, rho = p.rho,
               v0 = p.v0;
  const double v02 = v0 * v0;
  SzSmallT e;
  e.b1 = kappa * v0 * (theta - v0) + gamma * gamma / 2.0 +
         (r * r - r * v02 + v02 * (v02 - 4.0 * rho * gamma) / 4.0) / n;
  e.gap_coeff =
      ((v02 - 2.0 * r) * (v02 - 2.0 * r) - 4.0 * rho * v02 * gamma) / (4.0 * n);
  return e;
}

ExpansionReport expansion_report(const ModelParams& p, const SwapSpec& spec) {
  ExpansionReport rep;
  rep.model = model_kind(p);
  const double T = spec.maturity;
  const double r = spec.rate;
  const int n = spec.periods;
  switch (rep.model) {
    case ModelKind::Heston: {
      const auto& h = std::get<HestonParams>(p);
      const HestonExpansion e = heston_expansion_n(h, T, r);
      const SmallTExpansion st = heston_smallT(h, r, n);
      const HestonGammaPoly gp = heston_gamma_poly(h, T, r, n);
      rep.coefficients = {{"a1", e.a1},
                          {"c1", e.c1},
                          {"rho_slope", e.rho_slope},
                          {"rho0", e.rho0},
                          {"b1", st.b1},
                          {"b2", st.b2},
                          {"smallT_gap_coeff", st.gap_coeff},
                          {"h0", gp.h0},
                          {"h1", gp.h1},
                          {"h2", gp.h2}};
      break;
    }
    case ModelKind::HullWhite: {
      const auto& h = std::get<HullWhiteParams>(p);
      const HullWhiteExpansion e = hw_expansion_n(h, T, r);
      const SmallTExpansion st = hw_smallT(h, r, n);
      const HwSigmaExpansion se = hw_sigma_expansion(h, T, r, n);
      rep.coefficients = {{"a1", e.a1},
                          {"a2", e.a2},
                          {"a3", e.a3},
                          {"rho_slope", e.rho_slope},
                          {"rho0", e.rho0},
                          {"b1", st.b1},
                          {"b2", st.b2},
                          {"smallT_gap_coeff", st.gap_coeff},
                          {"h0_sigma", se.h0},
                          {"h1_sigma", se.h1}};
      break;
    }
    case ModelKind::SchobelZhu: {
      const auto& h = std::get<SchobelZhuParams>(p);
      const SchobelZhuExpansion e = sz_expansion_n(h, T, r);
      const SzSmallT st = sz_smallT(h, r, n);
      rep.coefficients = {{"a1", e.a1},
                          {"d1", e.d1},
                          {"d2", e.d2},
                          {"D", e.big_d},
                          {"E", e.big_e},
                          {"rho_slope", e.rho_slope},
                          {"rho0", e.rho0},
                          {"b1", st.b1},
                          {"smallT_gap_coeff", st.gap_coeff}};
      break;
    }
  }
  return rep;
}

}  // namespace vswap
