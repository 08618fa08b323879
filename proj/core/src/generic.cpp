#include "vswap/generic.hpp"

#include <array>
#include <cmath>
#include <exception>

#include "vswap/errors.hpp"
#include "vswap/heston.hpp"
#include "vswap/hullwhite.hpp"
#include "vswap/quadrature.hpp"
#include "vswap/schobelzhu.hpp"

namespace vswap {

namespace {

// One interval's E[(ln S_{t+dt}/S_t)^2] at a fixed quadrature order.
double interval_expectation(const ModelKernels& k, double t, double dt,
                            double r, std::size_t order) {
  const double rho = k.rho;
  const double t1 = t + dt;

  const double i1 = integrate(k.m1, t, t1, order);
  const double i5 = integrate([&](double s) { return k.m5(t, dt, s); }, t, t1, order);
  const double i2 = integrate2(k.m2, t, t1, order);
  const double i3 = integrate2(k.m3, t, t1, order);
  const double i4 = integrate2(k.m4, t, t1, order);
  const double finc = k.f_increment_sq(t, dt);

  return r * r * dt * dt + (1.0 - rho * rho - r * dt) * i1 - rho * i5 +
         0.25 * i2 + rho * rho * finc + rho * rho * i3 + rho * i4;
}

}  // namespace

double generic_discrete_strike(const ModelKernels& k, const SwapSpec& spec,
                               double tol) {
  const double dt = spec.dt();
  constexpr std::array<std::size_t, 4> orders = {8, 16, 32, 64};

  double prev = 0.0;
  bool have_prev = false;
  for (std::size_t order : orders) {
    double sum = 0.0;
    try {
      for (int i = 0; i < spec.periods; ++i) {
        sum += interval_expectation(k, i * dt, dt, spec.rate, order);
      }
    } catch (const PricingError&) {
      throw;
    } catch (const std::exception& e) {
      throw KernelFailure(std::string("kernel callable threw: ") + e.what());
    }
    const double value = sum / spec.maturity;
    if (have_prev) {
      const double scale = std::max(std::abs(value), 1e-300);
      if (std::abs(value - prev) <= tol * scale) return value;
    }
    prev = value;
    have_prev = true;
  }
  throw NoConvergence("quadrature refinement stalled before tolerance at order 64");
}

RateStructure rate_structure(const std::function<double(double)>& price_at,
                             const SwapSpec& spec, double k_c) {
  RateStructure rs;
  rs.b_of_n = price_at(0.0);
  rs.k_c = k_c;
  rs.critical_rate = k_c / 2.0;
  rs.dt = spec.dt();

  for (double probe : {0.03, 0.08}) {
    const double direct = price_at(probe);
    const double rebuilt = rs.reconstruct(probe);
    const double scale = std::max({std::abs(direct), std::abs(rs.b_of_n), 1e-300});
    if (std::abs(direct - rebuilt) > 1e-10 * scale) {
      throw StructureViolation("quadratic rate reconstruction failed at probe rate");
    }
  }
  return rs;
}

double discrete_strike(const ModelParams& p, const SwapSpec& spec) {
  return std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, HestonParams>) {
          return heston_discrete_strike(m, spec);
        } else if constexpr (std::is_same_v<T, HullWhiteParams>) {
          return hw_discrete_strike(m, spec);
        } else {
          return sz_discrete_strike(m, spec);
        }
      },
      p);
}

double continuous_strike(const ModelParams& p, double maturity) {
  return std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, HestonParams>) {
          return heston_continuous_strike(m, maturity);
        } else if constexpr (std::is_same_v<T, HullWhiteParams>) {
          return hw_continuous_strike(m, maturity);
        } else {
          return sz_continuous_strike(m, maturity);
        }
      },
      p);
}

GapReport convex_order_gap(const ModelParams& p, const SwapSpec& spec) {
  GapReport g;
  g.k_d = discrete_strike(p, spec);
  g.k_c = continuous_strike(p, spec.maturity);
  g.gap = g.k_d - g.k_c;
  g.negative = g.gap < 0.0;
  return g;
}

}  // namespace vswap
