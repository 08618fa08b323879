#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "vswap/errors.hpp"
#include "vswap/heston.hpp"
#include "vswap/hullwhite.hpp"
#include "vswap/quadrature.hpp"

using namespace vswap;

namespace {

const HullWhiteParams kBase{0.0, 0.5, -0.3, 0.04};
const HestonParams kSet1{6.21, 0.019, 0.31, -0.7, 0.010201};
const HestonParams kSet2{2.0, 0.09, 1.0, -0.3, 0.09};

// E[V_s^a V_u^b] for GBM via the bivariate-normal moment generating
// function of (ln V_s, ln V_u): independent of the library code.
double gbm_cross_oracle(const HullWhiteParams& p, double a, double s, double b,
                        double u) {
  const double lo = std::min(s, u), m_s = (p.mu - 0.5 * p.sigma * p.sigma);
  const double mean = a * (std::log(p.v0) + m_s * s) + b * (std::log(p.v0) + m_s * u);
  const double var = p.sigma * p.sigma *
                     (a * a * s + b * b * u + 2.0 * a * b * lo);
  return std::exp(mean + 0.5 * var);
}

}  // namespace

TEST_CASE("continuous strike equals the integrated mean variance") {
  HullWhiteParams p = kBase;
  p.mu = 0.8;
  const double direct = integrate(
      [&](double s) { return p.v0 * std::exp(p.mu * s); }, 0.0, 1.5, 48);
  CHECK(hw_continuous_strike(p, 1.5) == doctest::Approx(direct / 1.5).epsilon(1e-13));
  CHECK(hw_continuous_strike(kBase, 3.0) == doctest::Approx(kBase.v0).epsilon(1e-14));
}

TEST_CASE("moment formulas agree with the lognormal oracle") {
  for (double a : {0.5, 1.0, 1.5, 2.0}) {
    CHECK(hw_moment(kBase, a, 0.7) ==
          doctest::Approx(gbm_cross_oracle(kBase, a, 0.7, 0.0, 0.7)).epsilon(1e-13));
  }
  HullWhiteParams p = kBase;
  p.mu = 0.3;
  for (double s : {0.2, 1.1}) {
    for (double u : {0.5, 2.0}) {
      CHECK(hw_cross_moment(p, 1.0, s, 1.0, u) ==
            doctest::Approx(gbm_cross_oracle(p, 1.0, s, 1.0, u)).epsilon(1e-13));
      CHECK(hw_cross_moment(p, 0.5, s, 1.0, u) ==
            doctest::Approx(gbm_cross_oracle(p, 0.5, s, 1.0, u)).epsilon(1e-13));
    }
  }
  const HwMoments m = hw_moments(p, 0.4, 1.3);
  CHECK(m.vv == doctest::Approx(gbm_cross_oracle(p, 1.0, 0.4, 1.0, 1.3)).epsilon(1e-13));
  CHECK(m.sqrt_v ==
        doctest::Approx(gbm_cross_oracle(p, 0.5, 0.4, 1.0, 1.3)).epsilon(1e-13));
  CHECK(m.v_sqrt ==
        doctest::Approx(gbm_cross_oracle(p, 1.0, 0.4, 0.5, 1.3)).epsilon(1e-13));
  CHECK(m.sqrt_sqrt ==
        doctest::Approx(gbm_cross_oracle(p, 0.5, 0.4, 0.5, 1.3)).epsilon(1e-13));
  CHECK(hw_variance_of_vt(p, 0.9) ==
        doctest::Approx(gbm_cross_oracle(p, 2.0, 0.9, 0.0, 0.9) -
                        std::pow(gbm_cross_oracle(p, 1.0, 0.9, 0.0, 0.9), 2))
            .epsilon(1e-12));
}

TEST_CASE("discrete strike is affine in rho") {
  HullWhiteParams p = kBase;
  p.mu = 0.2;
  const SwapSpec spec{1.0, 52, 0.03};
  p.rho = -0.6;
  const double lo = hw_discrete_strike(p, spec);
  p.rho = 0.0;
  const double mid = hw_discrete_strike(p, spec);
  p.rho = 0.6;
  const double hi = hw_discrete_strike(p, spec);
  CHECK(hi - mid == doctest::Approx(mid - lo).epsilon(1e-10));
}

TEST_CASE("rate dependence follows the quadratic decomposition") {
  const SwapSpec base{1.0, 12, 0.0};
  const double k_c = hw_continuous_strike(kBase, base.maturity);
  const double b = hw_discrete_strike(kBase, base);
  for (double r : {0.01, 0.05, 0.15}) {
    SwapSpec spec = base;
    spec.rate = r;
    CHECK(hw_discrete_strike(kBase, spec) ==
          doctest::Approx(b + base.dt() * (r - k_c) * r).epsilon(1e-12));
  }
}

TEST_CASE("sigma = 0 reduces to the deterministic variance strike") {
  HullWhiteParams p{0.4, 0.0, 0.0, 0.04};
  const SwapSpec spec{1.0, 4, 0.02};
  double expected = 0.0;
  for (int i = 0; i < spec.periods; ++i) {
    const double a = i * spec.dt(), b = (i + 1) * spec.dt();
    const double j = integrate(
        [&](double s) { return p.v0 * std::exp(p.mu * s); }, a, b, 32);
    const double x = spec.rate * spec.dt() - 0.5 * j;
    expected += x * x + j;
  }
  expected /= spec.maturity;
  CHECK(hw_discrete_strike(p, spec) == doctest::Approx(expected).epsilon(1e-12));

  // mu = 0 as well: constant variance.
  HullWhiteParams q{0.0, 0.0, 0.0, 0.04};
  const double dt = spec.dt();
  const double x = spec.rate * dt - 0.5 * q.v0 * dt;
  CHECK(hw_discrete_strike(q, spec) ==
        doctest::Approx((spec.periods * (x * x) / spec.maturity) + q.v0)
            .epsilon(1e-12));
}

TEST_CASE("matching reproduces the Heston continuous strike and variance") {
  for (double T : {1.0, 5.0, 1.0 / 12.0}) {
    for (const HestonParams* h : {&kSet1, &kSet2}) {
      const HullWhiteParams m = hw_match_params(*h, T);
      CHECK(m.rho == h->rho);
      CHECK(m.v0 == h->v0);
      CHECK(hw_continuous_strike(m, T) ==
            doctest::Approx(heston_continuous_strike(*h, T)).epsilon(1e-10));
      CHECK(hw_variance_of_vt(m, T) ==
            doctest::Approx(heston_variance_of_vt(*h, T)).epsilon(1e-10));
    }
  }
}

TEST_CASE("matched parameters for the reference sets") {
  const HullWhiteParams m1 = hw_match_params(kSet1, 1.0);
  CHECK(m1.mu == doctest::Approx(1.0056501).epsilon(1e-5));
  CHECK(m1.sigma == doctest::Approx(0.4157558).epsilon(1e-5));

  const HullWhiteParams m2 = hw_match_params(kSet2, 5.0);
  CHECK(std::abs(m2.mu) < 1e-9);  // V0 = theta: flat mean variance
  CHECK(m2.sigma == doctest::Approx(0.5155790).epsilon(1e-5));

  const HullWhiteParams m3 = hw_match_params(kSet1, 1.0 / 12.0);
  CHECK(m3.mu == doctest::Approx(4.0451086).epsilon(1e-5));
  CHECK(m3.sigma == doctest::Approx(1.7837630).epsilon(1e-5));
}
