#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "vswap/errors.hpp"
#include "vswap/quadrature.hpp"
#include "vswap/schobelzhu.hpp"

using namespace vswap;

namespace {

const SchobelZhuParams kRef{6.21, 0.13784048752090222, 0.31, -0.7, 0.101};
const SwapSpec kSpec{1.0, 12, 0.0319};

struct Gauss {
  double m1, m2, v1, v2, c;  // means, variances, covariance
};

// OU joint law of (V_s, V_u), s <= u, written out independently.
Gauss ou_law(const SchobelZhuParams& p, double s, double u) {
  Gauss g;
  g.m1 = p.theta + (p.v0 - p.theta) * std::exp(-p.kappa * s);
  g.m2 = p.theta + (p.v0 - p.theta) * std::exp(-p.kappa * u);
  const double g2 = p.gamma * p.gamma / (2.0 * p.kappa);
  g.v1 = g2 * (1.0 - std::exp(-2.0 * p.kappa * s));
  g.v2 = g2 * (1.0 - std::exp(-2.0 * p.kappa * u));
  g.c = std::exp(-p.kappa * (u - s)) * g.v1;
  return g;
}

}  // namespace

TEST_CASE("continuous strike integrates the second moment of volatility") {
  const double direct = integrate(
      [&](double s) {
        const Gauss g = ou_law(kRef, s, s);
        return g.m1 * g.m1 + g.v1;
      },
      0.0, 1.0, 64);
  CHECK(sz_continuous_strike(kRef, 1.0) == doctest::Approx(direct).epsilon(1e-13));
}

TEST_CASE("OU moments match the bivariate Gaussian oracle") {
  for (double s : {0.15, 0.6}) {
    for (double u : {0.6, 1.4}) {
      if (s > u) continue;
      const Gauss g = ou_law(kRef, s, u);
      const OuMoments m = ou_moments(kRef, s, u);
      CHECK(m.m1 == doctest::Approx(g.m2).epsilon(1e-13));
      CHECK(m.m2 == doctest::Approx(g.m2 * g.m2 + g.v2).epsilon(1e-13));
      CHECK(m.m3 ==
            doctest::Approx(g.m2 * g.m2 * g.m2 + 3.0 * g.m2 * g.v2).epsilon(1e-13));
      CHECK(m.m4 == doctest::Approx(std::pow(g.m2, 4) + 6.0 * g.m2 * g.m2 * g.v2 +
                                    3.0 * g.v2 * g.v2)
                        .epsilon(1e-13));
      CHECK(m.vv == doctest::Approx(g.m1 * g.m2 + g.c).epsilon(1e-13));
      // Isserlis expansions for mixed powers.
      CHECK(m.vv2 == doctest::Approx(g.m1 * (g.m2 * g.m2 + g.v2) + 2.0 * g.m2 * g.c)
                         .epsilon(1e-13));
      CHECK(m.v2v == doctest::Approx(g.m2 * (g.m1 * g.m1 + g.v1) + 2.0 * g.m1 * g.c)
                         .epsilon(1e-13));
      CHECK(m.v2v2 ==
            doctest::Approx(g.m1 * g.m1 * g.m2 * g.m2 + g.m1 * g.m1 * g.v2 +
                            g.m2 * g.m2 * g.v1 + g.v1 * g.v2 + 2.0 * g.c * g.c +
                            4.0 * g.m1 * g.m2 * g.c)
                .epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(ou_moments(kRef, 1.0, 0.5), OrderViolation);
}

TEST_CASE("vanishing volatility-of-volatility gives the deterministic strike") {
  SchobelZhuParams p = kRef;
  p.gamma = 0.0;
  for (int n : {1, 4, 12}) {
    SwapSpec spec = kSpec;
    spec.periods = n;
    double expected = 0.0;
    for (int i = 0; i < n; ++i) {
      const double a = i * spec.dt(), b = (i + 1) * spec.dt();
      const double j = integrate(
          [&](double s) {
            const double e = p.theta + (p.v0 - p.theta) * std::exp(-p.kappa * s);
            return e * e;
          },
          a, b, 48);
      const double x = spec.rate * spec.dt() - 0.5 * j;
      expected += x * x + j;
    }
    expected /= spec.maturity;
    CHECK(sz_discrete_strike(p, spec) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("discrete strike is quadratic in rho") {
  auto at_rho = [&](double rho) {
    SchobelZhuParams p = kRef;
    p.rho = rho;
    return sz_discrete_strike(p, kSpec);
  };
  const double r0 = -0.8, r1 = 0.0, r2 = 0.8, rx = -0.7;
  const double f0 = at_rho(r0), f1 = at_rho(r1), f2 = at_rho(r2);
  const double fit =
      f0 * (rx - r1) * (rx - r2) / ((r0 - r1) * (r0 - r2)) +
      f1 * (rx - r0) * (rx - r2) / ((r1 - r0) * (r1 - r2)) +
      f2 * (rx - r0) * (rx - r1) / ((r2 - r0) * (r2 - r1));
  CHECK(at_rho(rx) == doctest::Approx(fit).epsilon(1e-10));
}

TEST_CASE("rate dependence follows the quadratic decomposition") {
  const double k_c = sz_continuous_strike(kRef, kSpec.maturity);
  SwapSpec spec = kSpec;
  spec.rate = 0.0;
  const double b = sz_discrete_strike(kRef, spec);
  for (double r : {0.0319, 0.08, 0.15}) {
    spec.rate = r;
    CHECK(sz_discrete_strike(kRef, spec) ==
          doctest::Approx(b + spec.dt() * (r - k_c) * r).epsilon(1e-12));
  }
}

TEST_CASE("discrete strike dominates the continuous one at zero rate and rho") {
  SchobelZhuParams p = kRef;
  p.rho = 0.0;
  SwapSpec spec = kSpec;
  spec.rate = 0.0;
  const double k_c = sz_continuous_strike(p, spec.maturity);
  for (int n : {1, 2, 16, 256}) {
    spec.periods = n;
    CHECK(sz_discrete_strike(p, spec) >= k_c);
  }
}

TEST_CASE("near-zero mean reversion is rejected as degenerate") {
  SchobelZhuParams p = kRef;
  p.kappa = 1e-12;
  CHECK_THROWS_AS(sz_discrete_strike(p, kSpec), DegenerateParameter);
}
