// Command-line driver: pricing, parameter sweeps, Hull-White matching,
// cross-method checks, and expansion reports.  Exit codes: 0 success,
// 2 validation/input failure, 3 numerical failure, 4 check failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vswap/asymptotics.hpp"
#include "vswap/errors.hpp"
#include "vswap/generic.hpp"
#include "vswap/heston.hpp"
#include "vswap/hullwhite.hpp"
#include "vswap/kernels.hpp"
#include "vswap/mc.hpp"
#include "vswap/params.hpp"
#include "vswap/params_io.hpp"
#include "vswap/schobelzhu.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitCheckFail = 4;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

struct CommonOpts {
  std::string model_file;
  std::optional<int> n;
  std::optional<double> maturity;
  std::optional<double> rate;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--model", o.model_file, "JSON parameter file")->required();
  cmd->add_option("--n", o.n, "number of sampling periods");
  cmd->add_option("--T", o.maturity, "maturity in years");
  cmd->add_option("--r", o.rate, "risk-free rate");
}

// Loads the file, overlays CLI flags, validates, and echoes the
// resolved inputs so a run can be reproduced from its log alone.
std::pair<vswap::ModelParams, vswap::SwapSpec> resolve(const CommonOpts& o) {
  const vswap::ParamFile pf = vswap::load_params(o.model_file);
  vswap::SwapSpec spec = vswap::resolve_spec(pf, vswap::SwapSpec{});
  if (o.maturity) spec.maturity = *o.maturity;
  if (o.n) spec.periods = *o.n;
  if (o.rate) spec.rate = *o.rate;

  const vswap::ValidationReport report = vswap::validate(pf.model, spec);
  for (const std::string& w : report.warnings) {
    std::cerr << "warning: " << w << "\n";
  }
  if (!report.ok()) {
    for (const std::string& v : report.violations) {
      std::cerr << "validation: " << v << "\n";
    }
    throw std::invalid_argument("parameter validation failed");
  }

  vswap::ParamFile echo{pf.model, spec.maturity, spec.periods, spec.rate};
  std::cerr << "resolved parameters: " << vswap::serialize_params(echo);
  return {pf.model, spec};
}

int cmd_price(const CommonOpts& o, bool simple_returns) {
  const auto [model, spec] = resolve(o);
  if (simple_returns) {
    const auto* hp = std::get_if<vswap::HestonParams>(&model);
    if (!hp) throw std::invalid_argument("--simple-returns requires the heston model");
    const double k = vswap::heston_simple_return_strike(*hp, spec, 1.0);
    std::cout << "K_simple = " << fmt(k) << "  (x1e4: " << fmt(k * 1e4) << ")\n";
    return kExitOk;
  }
  const double kd = vswap::discrete_strike(model, spec);
  const double kc = vswap::continuous_strike(model, spec.maturity);
  std::cout << "K_d  = " << fmt(kd) << "\n"
            << "K_c  = " << fmt(kc) << "\n"
            << "gap  = " << fmt(kd - kc) << "\n"
            << "r*   = " << fmt(kc / 2.0) << "\n";
  return kExitOk;
}

double expansion_a1(const vswap::ModelParams& model, const vswap::SwapSpec& spec) {
  switch (vswap::model_kind(model)) {
    case vswap::ModelKind::Heston:
      return vswap::heston_expansion_n(std::get<vswap::HestonParams>(model),
                                       spec.maturity, spec.rate)
          .a1;
    case vswap::ModelKind::HullWhite:
      return vswap::hw_expansion_n(std::get<vswap::HullWhiteParams>(model),
                                   spec.maturity, spec.rate)
          .a1;
    case vswap::ModelKind::SchobelZhu:
      return vswap::sz_expansion_n(std::get<vswap::SchobelZhuParams>(model),
                                   spec.maturity, spec.rate)
          .a1;
  }
  return 0.0;
}

void set_variable(vswap::ModelParams& model, vswap::SwapSpec& spec,
                  const std::string& var, double x) {
  if (var == "n") {
    spec.periods = static_cast<int>(std::lround(x));
    return;
  }
  if (var == "T") {
    spec.maturity = x;
    return;
  }
  if (var == "r") {
    spec.rate = x;
    return;
  }
  std::visit(
      [&](auto& m) {
        using M = std::decay_t<decltype(m)>;
        if (var == "rho") {
          m.rho = x;
        } else if constexpr (std::is_same_v<M, vswap::HullWhiteParams>) {
          if (var == "sigma") m.sigma = x;
          else throw std::invalid_argument("variable not valid for model: " + var);
        } else {
          if (var == "gamma") m.gamma = x;
          else throw std::invalid_argument("variable not valid for model: " + var);
        }
      },
      model);
}

int cmd_sweep(const CommonOpts& o, const std::string& var, double start,
              double stop, int count, bool log_spacing, const std::string& out) {
  if (count < 2) throw std::invalid_argument("sweep count must be >= 2");
  if (log_spacing && (start <= 0.0 || stop <= 0.0)) {
    throw std::invalid_argument("log spacing requires positive range");
  }
  const auto [model0, spec0] = resolve(o);

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out.empty()) {
    file.open(out, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file: " + out);
    os = &file;
  }

  *os << "x,K_d,K_c,gap,a1_prediction\n";
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / (count - 1);
    const double x = log_spacing ? start * std::pow(stop / start, t)
                                 : start + (stop - start) * t;
    vswap::ModelParams model = model0;
    vswap::SwapSpec spec = spec0;
    set_variable(model, spec, var, x);
    const double kd = vswap::discrete_strike(model, spec);
    const double kc = vswap::continuous_strike(model, spec.maturity);
    const double pred = kc + expansion_a1(model, spec) / spec.periods;
    *os << fmt(x) << ',' << fmt(kd) << ',' << fmt(kc) << ',' << fmt(kd - kc)
        << ',' << fmt(pred) << '\n';
  }
  return kExitOk;
}

int cmd_match(const CommonOpts& o, const std::string& out) {
  const auto [model, spec] = resolve(o);
  const auto* hp = std::get_if<vswap::HestonParams>(&model);
  if (!hp) throw std::invalid_argument("match requires a heston parameter file");
  const vswap::HullWhiteParams hw = vswap::hw_match_params(*hp, spec.maturity);
  std::cout << "mu    = " << fmt(hw.mu) << "\n"
            << "sigma = " << fmt(hw.sigma) << "\n"
            << "rho   = " << fmt(hw.rho) << "\n"
            << "v0    = " << fmt(hw.v0) << "\n";
  if (!out.empty()) {
    vswap::ParamFile pf{hw, spec.maturity, spec.periods, spec.rate};
    vswap::save_params(pf, out);
  }
  return kExitOk;
}

int cmd_check(const CommonOpts& o, std::int64_t mc_paths, int mc_substeps,
              std::uint64_t seed) {
  const auto [model, spec] = resolve(o);
  const double closed = vswap::discrete_strike(model, spec);
  const double quad =
      vswap::generic_discrete_strike(vswap::model_kernels(model), spec, 1e-10);
  vswap::McConfig cfg;
  cfg.paths = mc_paths;
  cfg.substeps = mc_substeps;
  cfg.seed = seed;
  const vswap::McEstimate mc = vswap::mc_discrete_strike(model, spec, cfg);

  const double quad_rel = std::abs(quad - closed) / std::abs(closed);
  const double mc_dev = mc.std_error > 0.0
                            ? std::abs(mc.mean - closed) / mc.std_error
                            : std::abs(mc.mean - closed);
  const bool quad_ok = quad_rel <= 1e-6;
  const bool mc_ok = mc_dev <= 3.0;

  std::cout << "closed form : " << fmt(closed) << "\n"
            << "quadrature  : " << fmt(quad) << "  (rel diff " << fmt(quad_rel)
            << ", " << (quad_ok ? "ok" : "FAIL") << ")\n"
            << "monte carlo : " << fmt(mc.mean) << " +/- " << fmt(mc.std_error)
            << "  (" << fmt(mc_dev) << " SE, " << (mc_ok ? "ok" : "FAIL")
            << ")\n"
            << (quad_ok && mc_ok ? "PASS" : "FAIL") << "\n";
  return quad_ok && mc_ok ? kExitOk : kExitCheckFail;
}

int cmd_expand(const CommonOpts& o) {
  const auto [model, spec] = resolve(o);
  const vswap::ExpansionReport rep = vswap::expansion_report(model, spec);
  std::cout << "model: " << vswap::model_name(rep.model) << "\n";
  for (const auto& [name, value] : rep.coefficients) {
    std::cout << name << " = " << fmt(value) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete variance swap fair-strike toolkit"};
  app.require_subcommand(1);

  CommonOpts price_opts, sweep_opts, match_opts, check_opts, expand_opts;
  bool simple_returns = false;
  auto* price = app.add_subcommand("price", "Price discrete and continuous strikes");
  add_common(price, price_opts);
  price->add_flag("--simple-returns", simple_returns,
                  "price the squared-simple-return swap (heston only)");

  std::string sweep_var = "n", sweep_out;
  double sweep_start = 1, sweep_stop = 252;
  int sweep_count = 2;
  bool sweep_log = false;
  auto* sweep = app.add_subcommand("sweep", "Emit a CSV sweep over one variable");
  add_common(sweep, sweep_opts);
  sweep->add_option("--var", sweep_var, "variable: n, rho, T, gamma, sigma, r")
      ->check(CLI::IsMember({"n", "rho", "T", "gamma", "sigma", "r"}));
  sweep->add_option("--start", sweep_start, "range start")->required();
  sweep->add_option("--stop", sweep_stop, "range stop")->required();
  sweep->add_option("--count", sweep_count, "grid points")->required();
  sweep->add_flag("--log", sweep_log, "logarithmic spacing");
  sweep->add_option("--out", sweep_out, "output CSV path (default stdout)");

  std::string match_out;
  auto* match = app.add_subcommand("match", "Match Hull-White params to a Heston model");
  add_common(match, match_opts);
  match->add_option("--out", match_out, "write matched parameters as JSON");

  std::int64_t mc_paths = 100000;
  int mc_substeps = 8;
  std::uint64_t seed = 42;
  auto* check = app.add_subcommand("check", "Cross-check closed form vs quadrature vs MC");
  add_common(check, check_opts);
  check->add_option("--mc-paths", mc_paths, "Monte Carlo paths");
  check->add_option("--mc-substeps", mc_substeps, "substeps per interval");
  check->add_option("--seed", seed, "RNG seed");

  auto* expand = app.add_subcommand("expand", "Print expansion coefficients");
  add_common(expand, expand_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (price->parsed()) return cmd_price(price_opts, simple_returns);
    if (sweep->parsed()) {
      return cmd_sweep(sweep_opts, sweep_var, sweep_start, sweep_stop,
                       sweep_count, sweep_log, sweep_out);
    }
    if (match->parsed()) return cmd_match(match_opts, match_out);
    if (check->parsed()) return cmd_check(check_opts, mc_paths, mc_substeps, seed);
    if (expand->parsed()) return cmd_expand(expand_opts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const vswap::PricingError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitValidation;
}
