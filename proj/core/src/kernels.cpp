#include "vswap/kernels.hpp"

#include <cmath>

#include "vswap/heston.hpp"
#include "vswap/hullwhite.hpp"
#include "vswap/schobelzhu.hpp"

namespace vswap {

namespace {

// Deterministic variance path g(s): all stochastic kernels vanish and the
// correlation drops out of the per-interval expectation.
ModelKernels deterministic_kernels(std::function<double(double)> g) {
  ModelKernels k;
  k.m1 = g;
  k.m2 = [g](double s, double u) { return g(s) * g(u); };
  k.m3 = [](double, double) { return 0.0; };
  k.m4 = [](double, double) { return 0.0; };
  k.m5 = [](double, double, double) { return 0.0; };
  k.f_increment_sq = [](double, double) { return 0.0; };
  k.rho = 0.0;
  return k;
}

// E[V_s^a V_u^b] under the OU volatility, any ordering, a,b in {1,2}.
double sz_cross(const SchobelZhuParams& p, int a, double s, int b, double u) {
  if (s > u) {
    std::swap(s, u);
    std::swap(a, b);
  }
  const OuMoments m = ou_moments(p, s, u);
  if (a == 1 && b == 1) return m.vv;
  if (a == 2 && b == 2) return m.v2v2;
  if (a == 1 && b == 2) return m.vv2;
  return m.v2v;
}

}  // namespace

ModelKernels heston_kernels(const HestonParams& p) {
  if (p.gamma == 0.0) {
    const HestonParams cp = p;
    return deterministic_kernels(
        [cp](double s) { return cp.theta + (cp.v0 - cp.theta) * std::exp(-cp.kappa * s); });
  }
  const double kappa = p.kappa, theta = p.theta, gamma = p.gamma, rho = p.rho;
  auto ev = [p](double s) { return p.theta + (p.v0 - p.theta) * std::exp(-p.kappa * s); };
  auto vv = [p](double s, double u) { return heston_cross_moment(p, s, u); };

  ModelKernels k;
  k.rho = rho;
  k.m1 = ev;
  k.m2 = vv;
  // h = kappa (theta - v) / gamma
  k.m3 = [=](double s, double u) {
    const double c = kappa / gamma;
    return c * c * (theta * theta - theta * (ev(s) + ev(u)) + vv(s, u));
  };
  k.m4 = [=](double s, double u) {
    return kappa / gamma * (theta * ev(u) - vv(s, u));
  };
  // f = v / gamma; 2 rho h + m^2 = (2 rho kappa theta / gamma)
  // + (1 - 2 rho kappa / gamma) v
  k.m5 = [=](double t, double delta, double s) {
    const double c0 = 2.0 * rho * kappa * theta / gamma;
    const double c1 = 1.0 - 2.0 * rho * kappa / gamma;
    return (c0 * (ev(t + delta) - ev(t)) +
            c1 * (vv(t + delta, s) - vv(t, s))) /
           gamma;
  };
  k.f_increment_sq = [=](double t, double delta) {
    const double a = t + delta;
    return (vv(a, a) + vv(t, t) - 2.0 * vv(t, a)) / (gamma * gamma);
  };
  return k;
}

ModelKernels hullwhite_kernels(const HullWhiteParams& p) {
  if (p.sigma == 0.0) {
    const HullWhiteParams cp = p;
    return deterministic_kernels(
        [cp](double s) { return cp.v0 * std::exp(cp.mu * s); });
  }
  const double mu = p.mu, sigma = p.sigma, rho = p.rho;
  const double hc = mu / sigma - sigma / 4.0;  // h = hc * sqrt(v)
  auto mom = [p](double a, double s) { return hw_moment(p, a, s); };
  auto cross = [p](double a, double s, double b, double u) {
    return hw_cross_moment(p, a, s, b, u);
  };

  ModelKernels k;
  k.rho = rho;
  k.m1 = [mom](double s) { return mom(1.0, s); };
  k.m2 = [cross](double s, double u) { return cross(1.0, s, 1.0, u); };
  k.m3 = [=](double s, double u) { return hc * hc * cross(0.5, s, 0.5, u); };
  k.m4 = [=](double s, double u) { return hc * cross(0.5, s, 1.0, u); };
  // f = 2 sqrt(v) / sigma
  k.m5 = [=](double t, double delta, double s) {
    const double a = t + delta;
    return 2.0 / sigma *
           (2.0 * rho * hc * (cross(0.5, a, 0.5, s) - cross(0.5, t, 0.5, s)) +
            (cross(0.5, a, 1.0, s) - cross(0.5, t, 1.0, s)));
  };
  k.f_increment_sq = [=](double t, double delta) {
    const double a = t + delta;
    return 4.0 / (sigma * sigma) *
           (mom(1.0, a) + mom(1.0, t) - 2.0 * cross(0.5, t, 0.5, a));
  };
  return k;
}

ModelKernels schobelzhu_kernels(const SchobelZhuParams& p) {
  if (p.gamma == 0.0) {
    const SchobelZhuParams cp = p;
    return deterministic_kernels([cp](double s) {
      const double e = cp.theta + (cp.v0 - cp.theta) * std::exp(-cp.kappa * s);
      return e * e;
    });
  }
  const double kappa = p.kappa, theta = p.theta, gamma = p.gamma, rho = p.rho;
  auto x = [p](int a, double s, int b, double u) { return sz_cross(p, a, s, b, u); };
  auto m1s = [p](double s) { return ou_moments(p, s, s).m1; };
  auto m2s = [p](double s) { return ou_moments(p, s, s).m2; };

  ModelKernels k;
  k.rho = rho;
  k.m1 = m2s;  // m(v) = v, so m^2 = v^2
  k.m2 = [x](double s, double u) { return x(2, s, 2, u); };
  // h = (kappa theta / gamma) v - (kappa / gamma) v^2 + gamma / 2
  k.m3 = [=](double s, double u) {
    const double ct = kappa * theta / gamma;
    const double cq = kappa / gamma;
    return ct * ct * x(1, s, 1, u) - ct * cq * (x(1, s, 2, u) + x(2, s, 1, u)) +
           cq * cq * x(2, s, 2, u) +
           (gamma / 2.0) * (ct * (m1s(s) + m1s(u)) - cq * (m2s(s) + m2s(u))) +
           gamma * gamma / 4.0;
  };
  k.m4 = [=](double s, double u) {
    return kappa * theta / gamma * x(1, s, 2, u) -
           kappa / gamma * x(2, s, 2, u) + gamma / 2.0 * m2s(u);
  };
  // f = v^2 / (2 gamma); 2 rho h + m^2 = (2 rho kappa theta / gamma) v
  // + (1 - 2 rho kappa / gamma) v^2 + rho gamma
  k.m5 = [=](double t, double delta, double s) {
    const double a = t + delta;
    const double c1 = 2.0 * rho * kappa * theta / gamma;
    const double c2 = 1.0 - 2.0 * rho * kappa / gamma;
    return (c1 * (x(2, a, 1, s) - x(2, t, 1, s)) +
            c2 * (x(2, a, 2, s) - x(2, t, 2, s)) +
            rho * gamma * (m2s(a) - m2s(t))) /
           (2.0 * gamma);
  };
  k.f_increment_sq = [=](double t, double delta) {
    const double a = t + delta;
    const double m4a = ou_moments(p, a, a).m4;
    const double m4t = ou_moments(p, t, t).m4;
    return (m4a + m4t - 2.0 * x(2, t, 2, a)) / (4.0 * gamma * gamma);
  };
  return k;
}

ModelKernels constant_variance_kernels(double theta) {
  return deterministic_kernels([theta](double) { return theta; });
}

ModelKernels model_kernels(const ModelParams& p) {
  return std::visit(
      [](const auto& m) -> ModelKernels {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, HestonParams>) return heston_kernels(m);
        else if constexpr (std::is_same_v<T, HullWhiteParams>) return hullwhite_kernels(m);
        else return schobelzhu_kernels(m);
      },
      p);
}

}  // namespace vswap
