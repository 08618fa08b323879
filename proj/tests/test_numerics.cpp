#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "vswap/errors.hpp"
#include "vswap/numerics.hpp"
#include "vswap/quadrature.hpp"

using namespace vswap;

TEST_CASE("phi matches direct evaluation away from zero") {
  for (double x : {-8.0, -2.0, -0.5, 0.5, 2.0, 8.0}) {
    CHECK(phi(x) == doctest::Approx(std::expm1(x) / x).epsilon(1e-14));
  }
}

TEST_CASE("phi is continuous and accurate through zero") {
  CHECK(phi(0.0) == 1.0);
  // Series phi(x) = 1 + x/2 + x^2/6 + x^3/24.
  for (double x : {1e-12, -1e-12, 1e-7, -1e-7, 1e-4, -1e-4}) {
    const double series = 1.0 + x / 2.0 + x * x / 6.0 + x * x * x / 24.0;
    CHECK(phi(x) == doctest::Approx(series).epsilon(1e-14));
  }
}

TEST_CASE("phi_prime matches central differences") {
  for (double x : {-3.0, -1.0, -1e-3, 0.0, 1e-3, 1.0, 3.0}) {
    const double h = 1e-6;
    const double fd = (phi(x + h) - phi(x - h)) / (2.0 * h);
    CHECK(phi_prime(x) == doctest::Approx(fd).epsilon(1e-8));
  }
  CHECK(phi_prime(0.0) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("phi_div_diff limits and generic values") {
  CHECK(phi_div_diff(0.7, 0.0) == doctest::Approx(phi_prime(0.7)).epsilon(1e-14));
  for (double p : {-2.0, 0.0, 1.3}) {
    for (double q : {-1.5, -1e-5, 1e-9, 2.0}) {
      const double direct = (phi(p + q) - phi(p)) / q;
      // Direct subtraction loses digits for tiny q; the divided
      // difference must stay close to the well-conditioned phi' value.
      const double ref = std::abs(q) < 1e-4 ? phi_prime(p) : direct;
      CHECK(phi_div_diff(p, q) == doctest::Approx(ref).epsilon(1e-6));
    }
  }
}

TEST_CASE("phi_ratio_diff value and continuation") {
  const double a = 2.0, b = 1.0;
  for (double x : {-1.0, 0.3, 4.0}) {
    CHECK(phi_ratio_diff(a, b, x) ==
          doctest::Approx((phi(a * x) - phi(b * x)) / x).epsilon(1e-13));
  }
  CHECK(phi_ratio_diff(a, b, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(phi_ratio_diff(a, b, 1e-10) == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("exp_integral agrees with closed form and small-c limit") {
  CHECK(exp_integral(0.0, 1.0, 3.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(exp_integral(2.0, 0.5, 1.5) ==
        doctest::Approx((std::exp(3.0) - std::exp(1.0)) / 2.0).epsilon(1e-14));
  CHECK(exp_integral(1e-13, 1.0, 2.0) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("exp_double_integral vs quadrature oracle") {
  auto oracle = [](double alpha, double beta, double delta) {
    return integrate(
        [&](double y) {
          return std::exp(beta * y) * exp_integral(alpha, 0.0, y);
        },
        0.0, delta, 48);
  };
  for (double alpha : {-2.0, 0.0, 1.0}) {
    for (double beta : {-1.0, 0.0, 2.0, -alpha}) {
      for (double delta : {0.3, 1.7}) {
        CHECK(exp_double_integral(alpha, beta, delta) ==
              doctest::Approx(oracle(alpha, beta, delta)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("solve_bracketed finds roots and reports bad brackets") {
  const double root = solve_bracketed(
      [](double x) { return x * x - 2.0; }, 0.0, 2.0);
  CHECK(root == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(solve_bracketed([](double x) { return x * x + 1.0; }, -1.0, 1.0),
                  RootNotBracketed);
}

TEST_CASE("Gauss-Legendre rule integrates polynomials exactly") {
  // Order-k rule is exact through degree 2k-1.
  const double p5 = integrate(
      [](double x) { return 1.0 + x + x * x * x * x * x; }, -1.0, 2.0, 8);
  // int = x + x^2/2 + x^6/6 over [-1, 2]
  const double exact = (2.0 + 2.0 + 64.0 / 6.0) - (-1.0 + 0.5 + 1.0 / 6.0);
  CHECK(p5 == doctest::Approx(exact).epsilon(1e-14));

  const auto& rule = gauss_legendre(16);
  double wsum = 0.0;
  for (double w : rule.weights) wsum += w;
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("integrate2 tensor rule on a separable integrand") {
  const double val = integrate2(
      [](double s, double u) { return std::exp(s) * u; }, 0.0, 1.0, 24);
  CHECK(val == doctest::Approx((std::exp(1.0) - 1.0) * 0.5).epsilon(1e-13));
}
