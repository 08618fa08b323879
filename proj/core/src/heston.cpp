#include "vswap/heston.hpp"

#include <cmath>
#include <complex>

#include "vswap/errors.hpp"
#include "vswap/numerics.hpp"

namespace vswap {

namespace {

constexpr double kKappaTFloor = 1e-8;

void require_kappa_t(double kappa, double t) {
  if (kappa * t < kKappaTFloor) {
    throw DegenerateParameter("kappa*T below stable-evaluation floor");
  }
}

}  // namespace

HestonAux heston_aux(const HestonParams& p, double rate) {
  return {rate - p.rho * p.kappa * p.theta / p.gamma,
          p.rho * p.kappa / p.gamma - 0.5};
}

double heston_continuous_strike(const HestonParams& p, double maturity) {
  require_kappa_t(p.kappa, maturity);
  // (1 - e^{-x})/x == phi(-x)
  return p.theta + (p.v0 - p.theta) * phi(-p.kappa * maturity);
}

double heston_discrete_strike(const HestonParams& p, const SwapSpec& spec) {
  const double T = spec.maturity;
  const double n = static_cast<double>(spec.periods);
  const double r = spec.rate;
  const double kappa = p.kappa, theta = p.theta, gamma = p.gamma, rho = p.rho,
               v0 = p.v0;
  require_kappa_t(kappa, T / n);

  const double x = kappa * T;      // kappa T
  const double y = x / n;          // kappa T / n
  const double em2x = std::expm1(-2.0 * x);  // e^{-2x} - 1
  const double emx = -std::expm1(-x);        // 1 - e^{-x}
  const double emy = -std::expm1(-y);        // 1 - e^{-y}
  const double epy = std::expm1(y);          // e^{y} - 1

  const double dv = v0 - theta;

  const double t1 = n * (gamma * gamma * (theta - 2.0 * v0) + 2.0 * kappa * dv * dv) *
                    em2x * (-epy) / (2.0 + epy);
  const double t2 =
      2.0 * kappa * T *
      (kappa * kappa * T * (theta - 2.0 * r) * (theta - 2.0 * r) +
       n * theta * (4.0 * kappa * kappa - 4.0 * rho * kappa * gamma + gamma * gamma));
  const double t3 =
      4.0 * dv *
      (n * (2.0 * kappa * kappa + gamma * gamma - 2.0 * rho * kappa * gamma) +
       kappa * kappa * T * (theta - 2.0 * r)) *
      emx;
  const double t4 = -2.0 * n * n * theta * gamma * (gamma - 4.0 * rho * kappa) * emy;
  // (1 - e^{-x}) / (1 - e^{y}) evaluated as a ratio of expm1 factors.
  const double t5 =
      4.0 * dv * kappa * T * gamma * (gamma - 2.0 * rho * kappa) * emx / (-epy);

  return (t1 + t2 + t3 + t4 + t5) / (8.0 * n * kappa * kappa * kappa * T);
}

HestonMoments heston_variance_moments(const HestonParams& p, double t, double s) {
  if (s > t) throw OrderViolation("requires s <= t");
  const double kappa = p.kappa, theta = p.theta, gamma = p.gamma, v0 = p.v0;
  const double g2 = gamma * gamma;
  const double dv = v0 - theta;
  HestonMoments m;
  m.mean = theta + std::exp(-kappa * t) * dv;
  m.cross = theta * theta +
            std::exp(-kappa * t) * dv * (theta + g2 / kappa) +
            std::exp(-kappa * s) * theta * dv +
            std::exp(-kappa * (t + s)) *
                (dv * dv + g2 / (2.0 * kappa) * (theta - 2.0 * v0)) +
            g2 / (2.0 * kappa) * theta * std::exp(-kappa * (t - s));
  m.variance = heston_variance_of_vt(p, t);
  return m;
}

double heston_cross_moment(const HestonParams& p, double s, double u) {
  const double hi = std::max(s, u);
  const double lo = std::min(s, u);
  return heston_variance_moments(p, hi, lo).cross;
}

double heston_variance_of_vt(const HestonParams& p, double t) {
  const double e1 = std::exp(-p.kappa * t);
  return p.gamma * p.gamma / (2.0 * p.kappa) *
         (p.theta + 2.0 * e1 * (p.v0 - p.theta) +
          e1 * e1 * (p.theta - 2.0 * p.v0));
}

double heston_simple_return_strike(const HestonParams& p, const SwapSpec& spec,
                                   double spot) {
  const double T = spec.maturity;
  const int n = spec.periods;
  const double r = spec.rate;
  const double kappa = p.kappa, theta = p.theta, gamma = p.gamma, rho = p.rho,
               v0 = p.v0;

  if (gamma <= 0.0) throw ValidityDomain("requires gamma > 0");
  const double alpha = p.alpha();
  if (alpha < 0.0) throw ValidityDomain("requires 2*kappa*theta/gamma^2 - 1 >= 0");
  if (gamma * gamma * T >= 1.0) throw ValidityDomain("requires gamma^2*T < 1");

  const double g2 = gamma * gamma;
  auto eta = [&](double t) { return 2.0 * kappa / (g2 * -std::expm1(-kappa * t)); };
  if (eta(T) <= 2.0) throw ValidityDomain("requires 2 < eta(T)");

  const double dt = T / n;
  using cplx = std::complex<double>;
  const double u = 2.0;
  const cplx d = std::sqrt(cplx((kappa - gamma * rho * u) * (kappa - gamma * rho * u) +
                                    g2 * (u - u * u),
                                0.0));
  const cplx g = (kappa - gamma * rho * u - d) / (kappa - gamma * rho * u + d);
  const cplx edd = std::exp(-d * dt);
  const cplx q = (kappa - gamma * rho * u - d) / g2 * (1.0 - edd) / (1.0 - g * edd);

  // M(2, dt) / S0^2
  const cplx m_over_s2 =
      std::exp(kappa * theta / g2 *
                   ((kappa - gamma * rho * u - d) * dt -
                    2.0 * std::log((1.0 - g * edd) / (1.0 - g))) +
               v0 * (kappa - gamma * rho * u - d) / g2 * (1.0 - edd) / (1.0 - g * edd));

  cplx sum = 0.0;
  for (int i = 0; i < n; ++i) {
    cplx ai;
    if (i == 0) {
      // eta(0) is infinite; the ratio factors tend to 1.
      ai = std::exp(2.0 * r * dt) * m_over_s2;
    } else {
      const double ei = eta(i * dt);
      const cplx ratio = ei / (ei - q);
      ai = std::exp(2.0 * r * dt) * m_over_s2 *
           std::exp(q * v0 * (ei * std::exp(-kappa * i * dt) / (ei - q) - 1.0)) *
           std::pow(ratio, alpha + 1.0);
    }
    sum += ai;
  }

  const cplx total = sum / T + (n - 2.0 * n * std::exp(r * dt)) / T;
  if (std::abs(total.imag()) > 1e-10 * std::max(1.0, std::abs(total.real()))) {
    throw NonRealMgf("complex evaluation left a non-negligible imaginary part");
  }
  (void)spot;  // the strike of squared simple returns is spot-independent
  return total.real();
}

}  // namespace vswap
