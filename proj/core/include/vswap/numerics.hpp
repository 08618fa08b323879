#pragma once

#include <functional>

namespace vswap {

// phi(x) = (e^x - 1)/x, continued with phi(0) = 1.  The workhorse for
// every (e^{aT} - 1)/a factor; evaluated via expm1 so small arguments
// keep full precision.
double phi(double x);

// phi'(x), stable for all x (series below |x| = 1).
double phi_prime(double x);

// Divided difference (phi(p + q) - phi(p)) / q, continued with
// phi'(p) at q = 0.  Direct subtraction for large |q|, otherwise a
// Gauss-Legendre integral of phi' so no cancellation occurs.
double phi_div_diff(double p, double q);

// (phi(a*x) - phi(b*x)) / x, continued at x = 0 with (a - b)/2.
double phi_ratio_diff(double a, double b, double x);

// Ordered double integral int_0^delta dy int_0^y dx e^{alpha*x + beta*y},
// exact in the limits alpha -> 0, beta -> 0, alpha + beta -> 0.
double exp_double_integral(double alpha, double beta, double delta);

// int_a^b e^{c*x} dx, stable for small |c*(b-a)|.
double exp_integral(double c, double a, double b);

// Bracketing root solve on [lo, hi] for a continuous function; bisection
// refined to ~1e-14 relative.  Throws RootNotBracketed if f(lo), f(hi)
// have the same sign.
double solve_bracketed(const std::function<double(double)>& f, double lo, double hi);

}  // namespace vswap
