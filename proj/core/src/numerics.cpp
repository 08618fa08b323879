#include "vswap/numerics.hpp"

#include <cmath>
#include <cstdlib>

#include "vswap/errors.hpp"
#include "vswap/quadrature.hpp"

namespace vswap {

double phi(double x) {
  if (x == 0.0) return 1.0;
  return std::expm1(x) / x;
}

double phi_prime(double x) {
  if (std::abs(x) < 1.0) {
    // phi(x) = sum x^k/(k+1)!  =>  phi'(x) = sum_{k>=1} k x^{k-1}/(k+1)!
    double sum = 0.0;
    double pw = 1.0;        // x^{k-1}
    double fact = 2.0;      // (k+1)!
    for (int k = 1; k <= 24; ++k) {
      sum += k * pw / fact;
      pw *= x;
      fact *= static_cast<double>(k + 2);
    }
    return sum;
  }
  return (std::exp(x) * (x - 1.0) + 1.0) / (x * x);
}

double phi_div_diff(double p, double q) {
  if (std::abs(q) > 2.0) {
    return (phi(p + q) - phi(p)) / q;
  }
  // int_0^1 phi'(p + t q) dt over a short interval: spectrally exact.
  const auto& gl = gauss_legendre(16);
  double sum = 0.0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    double t = 0.5 * (gl.nodes[i] + 1.0);
    sum += gl.weights[i] * phi_prime(p + t * q);
  }
  return 0.5 * sum;
}

double phi_ratio_diff(double a, double b, double x) {
  if (std::abs(x) * std::max(std::abs(a), std::abs(b)) < 0.5) {
    // sum_{k>=1} (a^k - b^k) x^{k-1} / (k+1)!
    double sum = 0.0;
    double pa = a, pb = b, px = 1.0, fact = 2.0;
    for (int k = 1; k <= 26; ++k) {
      sum += (pa - pb) * px / fact;
      pa *= a;
      pb *= b;
      px *= x;
      fact *= static_cast<double>(k + 2);
    }
    return sum;
  }
  return (phi(a * x) - phi(b * x)) / x;
}

double exp_double_integral(double alpha, double beta, double delta) {
  return delta * delta * phi_div_diff(beta * delta, alpha * delta);
}

double exp_integral(double c, double a, double b) {
  // e^{c a} * (b - a) * phi(c (b - a))
  return std::exp(c * a) * (b - a) * phi(c * (b - a));
}

double solve_bracketed(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw RootNotBracketed("no sign change on the given interval");
  }
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace vswap
