#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace vswap {

// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Cached rule of the given order (computed once, thread-safe).
const GaussLegendreRule& gauss_legendre(std::size_t order);

// int_a^b f(x) dx with a fixed-order rule.
double integrate(const std::function<double(double)>& f, double a, double b,
                 std::size_t order);

// Tensor-product rule over [a,b] x [a,b] for f(s, u).
double integrate2(const std::function<double(double, double)>& f, double a,
                  double b, std::size_t order);

}  // namespace vswap
