#include "vswap/mc.hpp"

#include <atomic>
#include <cmath>
#include <cstdint>
#include <random>
#include <thread>
#include <utility>
#include <vector>

#include <boost/math/distributions/non_central_chi_squared.hpp>

#include "vswap/errors.hpp"

namespace vswap {

namespace {

using Engine = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Ziggurat tables for the standard normal (Marsaglia-Tsang, 128 layers).
struct ZigTables {
  double kn[128];
  double wn[128];
  double fn[128];

  ZigTables() {
    const double m1 = 2147483648.0;
    double dn = 3.442619855899, tn = dn;
    const double vn = 9.91256303526217e-3;
    const double q = vn / std::exp(-0.5 * dn * dn);
    kn[0] = (dn / q) * m1;
    kn[1] = 0.0;
    wn[0] = q / m1;
    wn[127] = dn / m1;
    fn[0] = 1.0;
    fn[127] = std::exp(-0.5 * dn * dn);
    for (int i = 126; i >= 1; --i) {
      dn = std::sqrt(-2.0 * std::log(vn / dn + std::exp(-0.5 * dn * dn)));
      kn[i + 1] = (dn / tn) * m1;
      tn = dn;
      fn[i] = std::exp(-0.5 * dn * dn);
      wn[i] = dn / m1;
    }
  }
};

const ZigTables& zig() {
  static const ZigTables tables;
  return tables;
}

// Per-block sampler: all draws funnel through one engine, so a block's
// stream is fully determined by its (seed, block) derived engine seed.
struct Rng {
  Engine eng;

  explicit Rng(std::uint64_t s) : eng(s) {}

  double uniform() {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
  }

  double normal() {
    const ZigTables& t = zig();
    for (;;) {
      const std::int32_t hz = static_cast<std::int32_t>(eng());
      const std::uint32_t iz = static_cast<std::uint32_t>(hz) & 127u;
      if (std::abs(static_cast<double>(hz)) < t.kn[iz]) {
        return hz * t.wn[iz];
      }
      if (iz == 0) {
        const double r = 3.442619855899;
        double x, y;
        do {
          x = -std::log(uniform()) / r;
          y = -std::log(uniform());
        } while (y + y < x * x);
        return hz > 0 ? r + x : -r - x;
      }
      const double x = hz * t.wn[iz];
      if (t.fn[iz] + uniform() * (t.fn[iz - 1] - t.fn[iz]) <
          std::exp(-0.5 * x * x)) {
        return x;
      }
    }
  }

  // Marsaglia-Tsang gamma, scale 1.
  double gamma(double shape) {
    if (shape < 1.0) {
      const double u = uniform();
      return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double cinv = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      const double x = normal();
      const double t = 1.0 + cinv * x;
      if (t <= 0.0) continue;
      const double v = t * t * t;
      const double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  // Exact Poisson: sequential inversion below mean 10, Hoermann PTRS above.
  long poisson(double mean) {
    if (mean < 10.0) {
      const double limit = std::exp(-mean);
      long k = 0;
      double prod = uniform();
      while (prod > limit) {
        ++k;
        prod *= uniform();
      }
      return k;
    }
    const double b = 0.931 + 2.53 * std::sqrt(mean);
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    const double log_mean = std::log(mean);
    for (;;) {
      const double u = uniform() - 0.5;
      const double v = uniform();
      const double us = 0.5 - std::abs(u);
      const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
      if (us >= 0.07 && v <= v_r) return static_cast<long>(kf);
      if (kf < 0.0 || (us < 0.013 && v > us)) continue;
      if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
          kf * log_mean - mean - std::lgamma(kf + 1.0)) {
        return static_cast<long>(kf);
      }
    }
  }
};

Rng block_rng(std::uint64_t seed, std::int64_t block) {
  return Rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(block))));
}

// Exact-transition simulators.  Each exposes the payoff ingredients of
// the log-return representation: m2 = m^2(v) plus f and h from the
// model's decomposition of the correlated Brownian integral.  A
// vanishing volatility-of-volatility makes the variance path
// deterministic; the whole Gaussian mass then sits on the orthogonal
// component.

struct HestonSim {
  double kappa, theta, gamma, rho;
  bool deterministic;
  double ekd = 0.0, c = 0.0, dof = 0.0;

  explicit HestonSim(const HestonParams& p)
      : kappa(p.kappa), theta(p.theta), gamma(p.gamma), rho(p.rho),
        deterministic(p.gamma == 0.0) {}

  void prepare(double delta) {
    ekd = std::exp(-kappa * delta);
    if (!deterministic) {
      c = gamma * gamma * -std::expm1(-kappa * delta) / (4.0 * kappa);
      dof = 4.0 * kappa * theta / (gamma * gamma);
    }
  }

  double m2(double v) const { return v; }
  double f(double v) const { return v / gamma; }
  double h(double v) const { return kappa * (theta - v) / gamma; }

  double step(double v, Rng& rng) const {
    if (deterministic) return theta + (v - theta) * ekd;
    const double lambda = v * ekd / c;
    if (dof >= 1.0) {
      // chi'2(d, lambda) = (Z + sqrt(lambda))^2 + chi2(d - 1): exact
      // for d >= 1 and free of Poisson draws.
      const double z = rng.normal() + std::sqrt(lambda);
      const double central = dof > 1.0 ? 2.0 * rng.gamma((dof - 1.0) / 2.0) : 0.0;
      return c * (z * z + central);
    }
    const double shape = dof / 2.0 + static_cast<double>(rng.poisson(lambda / 2.0));
    if (shape == 0.0) return 0.0;
    return c * 2.0 * rng.gamma(shape);
  }

  // Antithetic pair via the inverse transform: monotone in the common
  // uniform, so the two coordinates are negatively coupled.
  std::pair<double, double> step_pair(double va, double vb, Rng& rng) const {
    if (deterministic) {
      return {theta + (va - theta) * ekd, theta + (vb - theta) * ekd};
    }
    double u = rng.uniform();
    u = std::min(std::max(u, 1e-15), 1.0 - 1e-15);
    const boost::math::non_central_chi_squared da(dof, va * ekd / c);
    const boost::math::non_central_chi_squared db(dof, vb * ekd / c);
    return {c * boost::math::quantile(da, u), c * boost::math::quantile(db, 1.0 - u)};
  }
};

struct HullWhiteSim {
  double mu, sigma, rho;
  bool deterministic;
  double drift = 0.0, vol = 0.0;

  explicit HullWhiteSim(const HullWhiteParams& p)
      : mu(p.mu), sigma(p.sigma), rho(p.rho), deterministic(p.sigma == 0.0) {}

  void prepare(double delta) {
    drift = (mu - 0.5 * sigma * sigma) * delta;
    vol = sigma * std::sqrt(delta);
  }

  double m2(double v) const { return v; }
  double f(double v) const { return 2.0 * std::sqrt(v) / sigma; }
  double h(double v) const { return (mu / sigma - sigma / 4.0) * std::sqrt(v); }

  double step(double v, Rng& rng) const {
    if (deterministic) return v * std::exp(drift);
    return v * std::exp(drift + vol * rng.normal());
  }

  std::pair<double, double> step_pair(double va, double vb, Rng& rng) const {
    if (deterministic) return {va * std::exp(drift), vb * std::exp(drift)};
    const double z = rng.normal();
    return {va * std::exp(drift + vol * z), vb * std::exp(drift - vol * z)};
  }
};

struct SchobelZhuSim {
  double kappa, theta, gamma, rho;
  bool deterministic;
  double ekd = 0.0, sd = 0.0;

  explicit SchobelZhuSim(const SchobelZhuParams& p)
      : kappa(p.kappa), theta(p.theta), gamma(p.gamma), rho(p.rho),
        deterministic(p.gamma == 0.0) {}

  void prepare(double delta) {
    ekd = std::exp(-kappa * delta);
    sd = deterministic
             ? 0.0
             : std::sqrt(gamma * gamma * -std::expm1(-2.0 * kappa * delta) /
                         (2.0 * kappa));
  }

  double m2(double v) const { return v * v; }
  double f(double v) const { return v * v / (2.0 * gamma); }
  double h(double v) const {
    return kappa * theta * v / gamma - kappa * v * v / gamma + gamma / 2.0;
  }

  double step(double v, Rng& rng) const {
    const double mean = theta + (v - theta) * ekd;
    if (deterministic) return mean;
    return mean + sd * rng.normal();
  }

  std::pair<double, double> step_pair(double va, double vb, Rng& rng) const {
    const double ma = theta + (va - theta) * ekd;
    const double mb = theta + (vb - theta) * ekd;
    if (deterministic) return {ma, mb};
    const double z = rng.normal();
    return {ma + sd * z, mb - sd * z};
  }
};

struct BlockSums {
  double sum = 0.0;
  double sumsq = 0.0;
};

// Runs `observations` independent samples in fixed-size blocks with
// per-block engines; the reduction order is block index, so the result
// is independent of the thread schedule.
template <class SampleFn>
McEstimate run_blocks(std::int64_t observations, const McConfig& cfg,
                      const SampleFn& sample) {
  constexpr std::int64_t kBlockSize = 4096;
  const std::int64_t blocks = (observations + kBlockSize - 1) / kBlockSize;
  std::vector<BlockSums> partial(static_cast<std::size_t>(blocks));

  auto work_block = [&](std::int64_t b) {
    Rng rng = block_rng(cfg.seed, b);
    const std::int64_t lo = b * kBlockSize;
    const std::int64_t hi = std::min(lo + kBlockSize, observations);
    BlockSums s;
    for (std::int64_t i = lo; i < hi; ++i) {
      const double x = sample(rng);
      s.sum += x;
      s.sumsq += x * x;
    }
    partial[static_cast<std::size_t>(b)] = s;
  };

  unsigned nthreads = cfg.threads > 0
                          ? static_cast<unsigned>(cfg.threads)
                          : std::max(1u, std::thread::hardware_concurrency());
  nthreads = std::min<unsigned>(nthreads, static_cast<unsigned>(blocks));
  if (nthreads <= 1) {
    for (std::int64_t b = 0; b < blocks; ++b) work_block(b);
  } else {
    std::atomic<std::int64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) {
      pool.emplace_back([&] {
        for (std::int64_t b = next.fetch_add(1); b < blocks; b = next.fetch_add(1)) {
          work_block(b);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  double sum = 0.0, sumsq = 0.0;
  for (const BlockSums& s : partial) {
    sum += s.sum;
    sumsq += s.sumsq;
  }
  const double n = static_cast<double>(observations);
  McEstimate est;
  est.mean = sum / n;
  const double var = std::max(0.0, (sumsq - n * est.mean * est.mean) / (n - 1.0));
  est.std_error = std::sqrt(var / n);
  est.config = cfg;
  return est;
}

// One path's discrete-swap payoff (1/T) sum x_i^2, advancing v in place.
template <class Sim>
double discrete_payoff(const Sim& sim, double& v, const SwapSpec& spec,
                       int substeps, Rng& rng) {
  const double dt = spec.dt();
  const double delta = dt / substeps;
  const double orth = sim.deterministic ? 1.0
                                        : std::sqrt(1.0 - sim.rho * sim.rho);
  double payoff = 0.0;
  for (int i = 0; i < spec.periods; ++i) {
    double im2 = 0.0, ih = 0.0;
    const double v_start = v;
    for (int j = 0; j < substeps; ++j) {
      const double vn = sim.step(v, rng);
      im2 += 0.5 * (sim.m2(v) + sim.m2(vn)) * delta;
      if (!sim.deterministic) ih += 0.5 * (sim.h(v) + sim.h(vn)) * delta;
      v = vn;
    }
    double x = spec.rate * dt - 0.5 * im2 +
               orth * rng.normal() * std::sqrt(std::max(im2, 0.0));
    if (!sim.deterministic) x += sim.rho * (sim.f(v) - sim.f(v_start) - ih);
    payoff += x * x;
  }
  return payoff / spec.maturity;
}

// Coupled pair version sharing the variance-path and orthogonal draws.
template <class Sim>
std::pair<double, double> discrete_payoff_pair(const Sim& sim, double& va,
                                               double& vb, const SwapSpec& spec,
                                               int substeps, Rng& rng) {
  const double dt = spec.dt();
  const double delta = dt / substeps;
  const double orth = sim.deterministic ? 1.0
                                        : std::sqrt(1.0 - sim.rho * sim.rho);
  double pa = 0.0, pb = 0.0;
  for (int i = 0; i < spec.periods; ++i) {
    double im2a = 0.0, iha = 0.0, im2b = 0.0, ihb = 0.0;
    const double va0 = va, vb0 = vb;
    for (int j = 0; j < substeps; ++j) {
      const auto [na, nb] = sim.step_pair(va, vb, rng);
      im2a += 0.5 * (sim.m2(va) + sim.m2(na)) * delta;
      im2b += 0.5 * (sim.m2(vb) + sim.m2(nb)) * delta;
      if (!sim.deterministic) {
        iha += 0.5 * (sim.h(va) + sim.h(na)) * delta;
        ihb += 0.5 * (sim.h(vb) + sim.h(nb)) * delta;
      }
      va = na;
      vb = nb;
    }
    const double z = rng.normal();
    double xa = spec.rate * dt - 0.5 * im2a + orth * z * std::sqrt(std::max(im2a, 0.0));
    double xb = spec.rate * dt - 0.5 * im2b - orth * z * std::sqrt(std::max(im2b, 0.0));
    if (!sim.deterministic) {
      xa += sim.rho * (sim.f(va) - sim.f(va0) - iha);
      xb += sim.rho * (sim.f(vb) - sim.f(vb0) - ihb);
    }
    pa += xa * xa;
    pb += xb * xb;
  }
  return {pa / spec.maturity, pb / spec.maturity};
}

template <class Sim>
McEstimate discrete_run(Sim sim, double v0, const SwapSpec& spec,
                        const McConfig& cfg) {
  sim.prepare(spec.dt() / cfg.substeps);
  if (cfg.antithetic) {
    const std::int64_t pairs = cfg.paths / 2;
    return run_blocks(pairs, cfg, [&](Rng& rng) {
      double va = v0, vb = v0;
      const auto [pa, pb] = discrete_payoff_pair(sim, va, vb, spec, cfg.substeps, rng);
      return 0.5 * (pa + pb);
    });
  }
  return run_blocks(cfg.paths, cfg, [&](Rng& rng) {
    double v = v0;
    return discrete_payoff(sim, v, spec, cfg.substeps, rng);
  });
}

template <class Sim>
McEstimate continuous_run(Sim sim, double v0, double maturity, int steps,
                          const McConfig& cfg) {
  sim.prepare(maturity / steps);
  const double delta = maturity / steps;
  if (cfg.antithetic) {
    const std::int64_t pairs = cfg.paths / 2;
    return run_blocks(pairs, cfg, [&](Rng& rng) {
      double va = v0, vb = v0, ia = 0.0, ib = 0.0;
      for (int j = 0; j < steps; ++j) {
        const auto [na, nb] = sim.step_pair(va, vb, rng);
        ia += 0.5 * (sim.m2(va) + sim.m2(na)) * delta;
        ib += 0.5 * (sim.m2(vb) + sim.m2(nb)) * delta;
        va = na;
        vb = nb;
      }
      return 0.5 * (ia + ib) / maturity;
    });
  }
  return run_blocks(cfg.paths, cfg, [&](Rng& rng) {
    double v = v0, integral = 0.0;
    for (int j = 0; j < steps; ++j) {
      const double vn = sim.step(v, rng);
      integral += 0.5 * (sim.m2(v) + sim.m2(vn)) * delta;
      v = vn;
    }
    return integral / maturity;
  });
}

void check_config(const McConfig& cfg, std::int64_t steps_per_path) {
  if (cfg.paths < 2) throw BudgetExceeded("requires at least 2 paths");
  if (cfg.substeps < 1) throw BudgetExceeded("requires at least 1 substep");
  const std::int64_t work = cfg.paths * steps_per_path;
  if (work > cfg.budget) {
    throw BudgetExceeded("paths * steps exceeds the configured budget");
  }
}

}  // namespace

McEstimate mc_discrete_strike(const ModelParams& p, const SwapSpec& spec,
                              const McConfig& cfg) {
  check_config(cfg, static_cast<std::int64_t>(cfg.substeps) * spec.periods);
  return std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, HestonParams>) {
          return discrete_run(HestonSim(m), m.v0, spec, cfg);
        } else if constexpr (std::is_same_v<T, HullWhiteParams>) {
          return discrete_run(HullWhiteSim(m), m.v0, spec, cfg);
        } else {
          return discrete_run(SchobelZhuSim(m), m.v0, spec, cfg);
        }
      },
      p);
}

McEstimate mc_continuous_strike(const ModelParams& p, double maturity,
                                const McConfig& cfg) {
  const int steps = 32 * cfg.substeps;
  check_config(cfg, steps);
  return std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, HestonParams>) {
          return continuous_run(HestonSim(m), m.v0, maturity, steps, cfg);
        } else if constexpr (std::is_same_v<T, HullWhiteParams>) {
          return continuous_run(HullWhiteSim(m), m.v0, maturity, steps, cfg);
        } else {
          return continuous_run(SchobelZhuSim(m), m.v0, maturity, steps, cfg);
        }
      },
      p);
}

}  // namespace vswap
