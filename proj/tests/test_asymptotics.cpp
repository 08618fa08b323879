#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "vswap/asymptotics.hpp"
#include "vswap/errors.hpp"
#include "vswap/heston.hpp"
#include "vswap/hullwhite.hpp"
#include "vswap/schobelzhu.hpp"

using namespace vswap;

namespace {

const HestonParams kSet1{6.21, 0.019, 0.31, -0.7, 0.010201};
const HullWhiteParams kHw{1.00565013, 0.41575583, -0.7, 0.010201};
const SchobelZhuParams kSz{6.21, 0.13784048752090222, 0.31, -0.7, 0.101};

double heston_gap_n(const HestonParams& p, double T, double r, int n) {
  return heston_discrete_strike(p, SwapSpec{T, n, r}) - heston_continuous_strike(p, T);
}

double hw_gap_n(const HullWhiteParams& p, double T, double r, int n) {
  return hw_discrete_strike(p, SwapSpec{T, n, r}) - hw_continuous_strike(p, T);
}

double sz_gap_n(const SchobelZhuParams& p, double T, double r, int n) {
  return sz_discrete_strike(p, SwapSpec{T, n, r}) - sz_continuous_strike(p, T);
}

}  // namespace

TEST_CASE("Heston a1 is the large-n limit of n times the gap") {
  const HestonExpansion e = heston_expansion_n(kSet1, 1.0, 0.0319);
  const double err2 = std::abs(100.0 * heston_gap_n(kSet1, 1.0, 0.0319, 100) - e.a1);
  const double err4 =
      std::abs(10000.0 * heston_gap_n(kSet1, 1.0, 0.0319, 10000) - e.a1);
  CHECK(err4 * 50.0 <= err2);
  CHECK(10000.0 * heston_gap_n(kSet1, 1.0, 0.0319, 10000) ==
        doctest::Approx(e.a1).epsilon(1e-2));
}

TEST_CASE("Heston a1 collapses to the deterministic value at gamma = 0") {
  HestonParams p = kSet1;
  p.gamma = 0.0;
  p.v0 = p.theta;
  const double r = 0.0319;
  const HestonExpansion e = heston_expansion_n(p, 1.0, r);
  // Constant variance theta: gap = (T/n)(r - theta/2)^2 exactly.
  CHECK(e.a1 == doctest::Approx(std::pow(r - p.theta / 2.0, 2)).epsilon(1e-12));
  CHECK(std::isnan(e.rho0));
  CHECK_THROWS_AS(heston_rho0(p, 1.0, r), IndeterminateRho0);
}

TEST_CASE("Heston critical correlation is positive at r = 0 and r = r*") {
  const double k_c = heston_continuous_strike(kSet1, 1.0);
  for (double r : {0.0, k_c / 2.0}) {
    const double rho0 = heston_rho0(kSet1, 1.0, r);
    CHECK(rho0 > 0.0);
    // a1 vanishes at rho0 by construction.
    HestonParams p = kSet1;
    p.rho = rho0;
    CHECK(std::abs(heston_expansion_n(p, 1.0, r).a1) < 1e-14);
  }
  // The slope in rho is strictly negative.
  CHECK(heston_expansion_n(kSet1, 1.0, 0.0319).rho_slope < 0.0);
}

TEST_CASE("Heston gamma polynomial reconstructs the discrete strike") {
  const SwapSpec spec{1.0, 12, 0.0319};
  const HestonGammaPoly poly = heston_gamma_poly(kSet1, 1.0, 0.0319, 12);
  for (double g : {0.0, 0.1, 0.31, 0.45, 0.6}) {
    HestonParams p = kSet1;
    p.gamma = g;
    CHECK(poly.eval(g) ==
          doctest::Approx(heston_discrete_strike(p, spec)).epsilon(1e-12));
  }
  // rho multiplies the whole linear coefficient.
  HestonParams p0 = kSet1;
  p0.rho = 0.0;
  CHECK(heston_gamma_poly(p0, 1.0, 0.0319, 12).h1 == doctest::Approx(0.0));
}

TEST_CASE("Heston small-T expansion captures the first two orders") {
  const int n = 12;
  const double r = 0.0319;
  const SmallTExpansion e = heston_smallT(kSet1, r, n);
  double prev = 0.0;
  for (int k = 4; k <= 10; ++k) {
    const double T = std::pow(2.0, -k);
    const double kd = heston_discrete_strike(kSet1, SwapSpec{T, n, r});
    const double resid = kd - kSet1.v0 - e.b1 * T - e.b2 * T * T;
    // Residual is O(T^3): halving T divides it by about 8.
    if (k > 4) CHECK(std::abs(resid) < 0.35 * std::abs(prev) + 1e-15);
    prev = resid;
    // Gap opens linearly with slope gap_coeff.
    const double gap = kd - heston_continuous_strike(kSet1, T);
    CHECK(gap / T == doctest::Approx(e.gap_coeff).epsilon(0.2 * T + 1e-6));
  }
}

TEST_CASE("Hull-White expansion orders extract by successive subtraction") {
  const double T = 1.0, r = 0.0319;
  const HullWhiteExpansion e = hw_expansion_n(kHw, T, r);

  const double err2 = std::abs(100.0 * hw_gap_n(kHw, T, r, 100) - e.a1);
  const double err4 = std::abs(10000.0 * hw_gap_n(kHw, T, r, 10000) - e.a1);
  CHECK(err4 * 50.0 <= err2);

  auto e2 = [&](int n) {
    return n * (n * hw_gap_n(kHw, T, r, n) - e.a1);
  };
  // Richardson in 1/n removes the a3/n contamination.
  const double a2_est = 2.0 * e2(800) - e2(400);
  CHECK(a2_est == doctest::Approx(e.a2).epsilon(1e-4));

  auto e3 = [&](int n) {
    return n * (n * (n * hw_gap_n(kHw, T, r, n) - e.a1) - e.a2);
  };
  const double a3_est = 2.0 * e3(200) - e3(100);
  CHECK(a3_est == doctest::Approx(e.a3).epsilon(1e-2));
}

TEST_CASE("Hull-White critical correlation is positive at r = 0 and r = r*") {
  const double k_c = hw_continuous_strike(kHw, 1.0);
  for (double r : {0.0, k_c / 2.0}) {
    const double rho0 = hw_rho0(kHw, 1.0, r);
    CHECK(rho0 > 0.0);
    HullWhiteParams p = kHw;
    p.rho = rho0;
    CHECK(std::abs(hw_expansion_n(p, 1.0, r).a1) < 1e-14);
  }
}

TEST_CASE("Hull-White small-T expansion captures the first two orders") {
  const int n = 12;
  const double r = 0.0319;
  const SmallTExpansion e = hw_smallT(kHw, r, n);
  double prev = 0.0;
  for (int k = 4; k <= 10; ++k) {
    const double T = std::pow(2.0, -k);
    const double kd = hw_discrete_strike(kHw, SwapSpec{T, n, r});
    const double resid = kd - kHw.v0 - e.b1 * T - e.b2 * T * T;
    if (k > 4) CHECK(std::abs(resid) < 0.35 * std::abs(prev) + 1e-15);
    prev = resid;
  }
}

TEST_CASE("Hull-White sigma expansion is tangent at sigma = 0") {
  const HwSigmaExpansion e = hw_sigma_expansion(kHw, 1.0, 0.0319, 12);
  HullWhiteParams p = kHw;
  p.sigma = 0.0;
  CHECK(e.h0 ==
        doctest::Approx(hw_discrete_strike(p, SwapSpec{1.0, 12, 0.0319}))
            .epsilon(1e-13));
  auto slope = [&](double sigma) {
    HullWhiteParams q = kHw;
    q.sigma = sigma;
    return (hw_discrete_strike(q, SwapSpec{1.0, 12, 0.0319}) - e.h0) / sigma;
  };
  // Richardson in sigma: slope(s) = h1 + c s + O(s^2).
  const double h1_est = 2.0 * slope(5e-4) - slope(1e-3);
  CHECK(h1_est == doctest::Approx(e.h1).epsilon(1e-5));
}

TEST_CASE("Schobel-Zhu a1 is the large-n limit of n times the gap") {
  const SchobelZhuExpansion e = sz_expansion_n(kSz, 1.0, 0.0319);
  const double err2 = std::abs(100.0 * sz_gap_n(kSz, 1.0, 0.0319, 100) - e.a1);
  const double err4 =
      std::abs(10000.0 * sz_gap_n(kSz, 1.0, 0.0319, 10000) - e.a1);
  CHECK(err4 * 50.0 <= err2);
  CHECK(e.a1 == doctest::Approx(e.d1 - e.d2 * kSz.gamma / (2.0 * kSz.kappa) * kSz.rho +
                                0.0319 * 0.0319 - 0.0319 * sz_continuous_strike(kSz, 1.0))
                    .epsilon(1e-12));
}

TEST_CASE("Schobel-Zhu a1 collapses at gamma = 0 with flat volatility") {
  SchobelZhuParams p = kSz;
  p.gamma = 0.0;
  p.v0 = p.theta;
  const double r = 0.0319;
  const SchobelZhuExpansion e = sz_expansion_n(p, 1.0, r);
  // Constant variance theta^2: gap = (T/n)(r - theta^2/2)^2 exactly.
  CHECK(e.a1 ==
        doctest::Approx(std::pow(r - p.theta * p.theta / 2.0, 2)).epsilon(1e-12));
  CHECK(std::isnan(e.rho0));
  CHECK_THROWS_AS(sz_rho0(p, 1.0, r), IndeterminateRho0);
}

TEST_CASE("Schobel-Zhu critical correlation is positive and kills a1") {
  for (double r : {0.0, sz_continuous_strike(kSz, 1.0) / 2.0}) {
    const double rho0 = sz_rho0(kSz, 1.0, r);
    CHECK(rho0 > 0.0);
    SchobelZhuParams p = kSz;
    p.rho = rho0;
    CHECK(std::abs(sz_expansion_n(p, 1.0, r).a1) < 1e-14);
  }
}

TEST_CASE("Schobel-Zhu small-T leading order") {
  const int n = 12;
  const double r = 0.0319;
  const SzSmallT e = sz_smallT(kSz, r, n);
  double prev = 0.0;
  for (int k = 4; k <= 10; ++k) {
    const double T = std::pow(2.0, -k);
    const double kd = sz_discrete_strike(kSz, SwapSpec{T, n, r});
    const double resid = kd - kSz.v0 * kSz.v0 - e.b1 * T;
    // Residual is O(T^2): halving T divides it by about 4.
    if (k > 4) CHECK(std::abs(resid) < 0.6 * std::abs(prev) + 1e-15);
    prev = resid;
  }
}

TEST_CASE("expansion reports carry named coefficients for every model") {
  const SwapSpec spec{1.0, 12, 0.0319};
  for (const ModelParams& p :
       {ModelParams{kSet1}, ModelParams{kHw}, ModelParams{kSz}}) {
    const ExpansionReport rep = expansion_report(p, spec);
    CHECK(rep.model == model_kind(p));
    CHECK_FALSE(rep.coefficients.empty());
    bool has_a1 = false;
    for (const auto& [name, value] : rep.coefficients) {
      if (name == "a1") has_a1 = true;
      CHECK(std::isfinite(value));
    }
    CHECK(has_a1);
  }
}
