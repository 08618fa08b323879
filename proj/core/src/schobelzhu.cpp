#include "vswap/schobelzhu.hpp"

#include <array>
#include <cmath>

#include "vswap/errors.hpp"
#include "vswap/expsum.hpp"
#include "vswap/numerics.hpp"

namespace vswap {

namespace {

constexpr double kKappaTFloor = 1e-8;

// Single-time OU moment curves as exponential sums in absolute time.
struct OuCurves {
  double kappa, theta, gamma;
  ExpSum1 m1, var, m2, m3, m4;

  explicit OuCurves(const SchobelZhuParams& p)
      : kappa(p.kappa), theta(p.theta), gamma(p.gamma) {
    const double g2k = p.gamma * p.gamma / (2.0 * p.kappa);
    m1 = ExpSum1::term(p.theta, 0.0);
    m1.add(p.v0 - p.theta, -p.kappa);
    var = ExpSum1::term(g2k, 0.0);
    var.add(-g2k, -2.0 * p.kappa);
    m2 = m1 * m1 + var;
    m3 = m1 * m1 * m1 + (m1 * var) * 3.0;
    m4 = m1 * m1 * m1 * m1 + (m1 * m1 * var) * 6.0 + (var * var) * 3.0;
  }

  // Conditional-expectation coefficient curves C_j(s) such that for
  // s <= u the cross moment equals sum_j C_j(s) e^{-j kappa (u - s)}.
  std::array<ExpSum1, 3> cross_vv() const {
    return {m1 * theta, m2 + m1 * (-theta), ExpSum1{}};
  }
  std::array<ExpSum1, 3> cross_v2v2() const {
    const double g2k = gamma * gamma / (2.0 * kappa);
    return {m2 * (theta * theta + g2k),
            m3 * (2.0 * theta) + m2 * (-2.0 * theta * theta),
            m4 + m3 * (-2.0 * theta) + m2 * (theta * theta - g2k)};
  }
  std::array<ExpSum1, 3> cross_vv2() const {
    const double g2k = gamma * gamma / (2.0 * kappa);
    return {m1 * (theta * theta + g2k),
            m2 * (2.0 * theta) + m1 * (-2.0 * theta * theta),
            m3 + m2 * (-2.0 * theta) + m1 * (theta * theta - g2k)};
  }
  std::array<ExpSum1, 3> cross_v2v() const {
    return {m2 * theta, m3 + m2 * (-theta), ExpSum1{}};
  }

  // Two-variable kernel on the ordered region s <= u.
  ExpSum2 kernel(const std::array<ExpSum1, 3>& coeff) const {
    ExpSum2 out;
    for (int j = 0; j < 3; ++j) {
      for (const auto& t : coeff[j].terms()) {
        out.add(t.c, t.alpha + j * kappa, -j * kappa);
      }
    }
    return out;
  }

  // Cross moment value at a fixed ordered pair s <= u.
  double cross_at(const std::array<ExpSum1, 3>& coeff, double s, double u) const {
    double sum = 0.0;
    for (int j = 0; j < 3; ++j) {
      sum += coeff[j].eval(s) * std::exp(-j * kappa * (u - s));
    }
    return sum;
  }

  // E[V_a^2 V_s] and E[V_a^2 V_s^2] as curves in s for fixed a, a <= s.
  ExpSum1 later_v(const double a) const {
    // e^{-k(s-a)} M3(a) + theta (1 - e^{-k(s-a)}) M2(a)
    const double m2a = m2.eval(a), m3a = m3.eval(a);
    ExpSum1 f = ExpSum1::term(theta * m2a, 0.0);
    f.add((m3a - theta * m2a) * std::exp(kappa * a), -kappa);
    return f;
  }
  ExpSum1 later_v2(const double a) const {
    const double g2k = gamma * gamma / (2.0 * kappa);
    const double m2a = m2.eval(a), m3a = m3.eval(a), m4a = m4.eval(a);
    ExpSum1 f = ExpSum1::term((theta * theta + g2k) * m2a, 0.0);
    f.add((2.0 * theta * m3a - 2.0 * theta * theta * m2a) * std::exp(kappa * a),
          -kappa);
    f.add((m4a - 2.0 * theta * m3a + (theta * theta - g2k) * m2a) *
              std::exp(2.0 * kappa * a),
          -2.0 * kappa);
    return f;
  }

  // E[V_b^2 V_s] and E[V_b^2 V_s^2] as curves in s for fixed b, s <= b.
  ExpSum1 earlier_v(const double b) const {
    ExpSum1 out;
    const auto coeff = cross_vv2();  // E[V_s V_b^2]
    for (int j = 0; j < 3; ++j) {
      for (const auto& t : coeff[j].terms()) {
        out.add(t.c * std::exp(-j * kappa * b), t.alpha + j * kappa);
      }
    }
    return out;
  }
  ExpSum1 earlier_v2(const double b) const {
    ExpSum1 out;
    const auto coeff = cross_v2v2();
    for (int j = 0; j < 3; ++j) {
      for (const auto& t : coeff[j].terms()) {
        out.add(t.c * std::exp(-j * kappa * b), t.alpha + j * kappa);
      }
    }
    return out;
  }
};

}  // namespace

double sz_continuous_strike(const SchobelZhuParams& p, double maturity) {
  const double T = maturity;
  const double kappa = p.kappa, theta = p.theta, gamma = p.gamma, v0 = p.v0;
  if (kappa * T < kKappaTFloor) {
    throw DegenerateParameter("kappa*T below stable-evaluation floor");
  }
  const double dv = v0 - theta;
  const double g2 = gamma * gamma;
  // (1 - e^{-cT})/T factors via phi for small kappa*T robustness.
  const double one_m_e2 = -std::expm1(-2.0 * kappa * T);
  const double one_m_e1 = -std::expm1(-kappa * T);
  return g2 / (2.0 * kappa) + theta * theta +
         (dv * dv / (2.0 * kappa * T) - g2 / (4.0 * kappa * kappa * T)) * one_m_e2 +
         2.0 * theta * dv * one_m_e1 / (kappa * T);
}

double sz_discrete_strike(const SchobelZhuParams& p, const SwapSpec& spec) {
  const double T = spec.maturity;
  const int n = spec.periods;
  const double r = spec.rate;
  const double dt = T / n;
  if (p.kappa * dt < kKappaTFloor) {
    throw DegenerateParameter("kappa*T/n below stable-evaluation floor");
  }

  const double kappa = p.kappa, theta = p.theta, gamma = p.gamma, rho = p.rho;

  if (gamma == 0.0) {
    // Deterministic volatility path e_s: each log increment is Gaussian
    // with mean r dt - J_i/2 and variance J_i, J_i = int e_s^2 ds.
    ExpSum1 e1 = ExpSum1::term(theta, 0.0);
    e1.add(p.v0 - theta, -kappa);
    const ExpSum1 e2 = e1 * e1;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const double ji = e2.integral(i * dt, (i + 1) * dt);
      const double mean = r * dt - 0.5 * ji;
      sum += mean * mean + ji;
    }
    return sum / T;
  }

  const OuCurves ou(p);
  const double g2 = gamma * gamma;

  // Global two-variable kernels (ordered region s <= u).
  const auto vv = ou.cross_vv();
  const auto v2v2 = ou.cross_v2v2();
  const auto vv2 = ou.cross_vv2();
  const auto v2v = ou.cross_v2v();

  const ExpSum2 k_m2 = ou.kernel(v2v2);

  // m3(s,u) for s <= u, written symmetrically.
  ExpSum2 k_m3;
  {
    const double c = kappa * kappa / g2;
    ExpSum2 tmp = ou.kernel(vv);
    tmp *= c * theta * theta;
    k_m3 += tmp;
    tmp = ou.kernel(vv2);
    tmp += ou.kernel(v2v);
    tmp *= -c * theta;
    k_m3 += tmp;
    tmp = ExpSum2::of_s(ou.m1);
    tmp += ExpSum2::of_u(ou.m1);
    tmp *= 0.5 * kappa * theta;
    k_m3 += tmp;
    tmp = ExpSum2::of_s(ou.m2);
    tmp += ExpSum2::of_u(ou.m2);
    tmp *= -0.5 * kappa;
    k_m3 += tmp;
    tmp = ou.kernel(v2v2);
    tmp *= c;
    k_m3 += tmp;
    k_m3.add(g2 / 4.0, 0.0, 0.0);
  }

  // m4(s,u) + m4(u,s) on the ordered region.
  ExpSum2 k_m4both;
  {
    ExpSum2 tmp = ou.kernel(vv2);
    tmp += ou.kernel(v2v);
    tmp *= kappa * theta / gamma;
    k_m4both += tmp;
    tmp = ou.kernel(v2v2);
    tmp *= -2.0 * kappa / gamma;
    k_m4both += tmp;
    tmp = ExpSum2::of_s(ou.m2);
    tmp += ExpSum2::of_u(ou.m2);
    tmp *= 0.5 * gamma;
    k_m4both += tmp;
  }

  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t0 = i * dt;
    const double t1 = (i + 1) * dt;

    const double i1 = ou.m2.integral(t0, t1);

    // int m5(t, s) ds
    const ExpSum1 late_v = ou.later_v(t0);       // E[V_{t0}^2 V_s]
    const ExpSum1 late_v2 = ou.later_v2(t0);     // E[V_{t0}^2 V_s^2]
    const ExpSum1 early_v = ou.earlier_v(t1);    // E[V_{t1}^2 V_s]
    const ExpSum1 early_v2 = ou.earlier_v2(t1);  // E[V_{t1}^2 V_s^2]
    const double m2_t0 = ou.m2.eval(t0);
    const double m2_t1 = ou.m2.eval(t1);
    const double i5 =
        (rho * kappa * theta / g2) *
            (early_v.integral(t0, t1) - late_v.integral(t0, t1)) +
        ((gamma - 2.0 * rho * kappa) / (2.0 * g2)) *
            (early_v2.integral(t0, t1) - late_v2.integral(t0, t1)) +
        (rho / 2.0) * (m2_t1 - m2_t0) * dt;

    const double i2 = 2.0 * k_m2.ordered_integral(t0, t1);
    const double i3 = 2.0 * k_m3.ordered_integral(t0, t1);
    const double i4 = k_m4both.ordered_integral(t0, t1);

    const double cross_tt1 = ou.cross_at(v2v2, t0, t1);
    const double finc =
        (ou.m4.eval(t1) + ou.m4.eval(t0) - 2.0 * cross_tt1) / (4.0 * g2);

    sum += r * r * dt * dt + (1.0 - rho * rho - r * dt) * i1 - rho * i5 +
           0.25 * i2 + rho * rho * finc + rho * rho * i3 + rho * i4;
  }
  return sum / T;
}

OuMoments ou_moments(const SchobelZhuParams& p, double s, double u) {
  if (s > u) throw OrderViolation("requires s <= u");
  const OuCurves ou(p);
  OuMoments m;
  m.mean_s = ou.m1.eval(s);
  m.var_s = ou.var.eval(s);
  m.m1 = m.mean_s;
  m.m2 = ou.m2.eval(s);
  m.m3 = ou.m3.eval(s);
  m.m4 = ou.m4.eval(s);
  m.vv = ou.cross_at(ou.cross_vv(), s, u);
  m.v2v2 = ou.cross_at(ou.cross_v2v2(), s, u);
  m.vv2 = ou.cross_at(ou.cross_vv2(), s, u);
  m.v2v = ou.cross_at(ou.cross_v2v(), s, u);
  return m;
}

}  // namespace vswap
