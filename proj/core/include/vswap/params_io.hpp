#pragma once

#include <optional>
#include <string>

#include "vswap/params.hpp"

namespace vswap {

// JSON parameter file: keys `model`, the model's own parameter keys
// (Heston/Schobel-Zhu: kappa, theta, gamma, rho, v0; Hull-White: mu,
// sigma, rho, v0), and optional contract keys `T`, `n`, `r`.  Any
// other key is rejected.  Serialize-then-parse reproduces every field
// bit-for-bit.
struct ParamFile {
  ModelParams model;
  std::optional<double> maturity;  // "T"
  std::optional<int> periods;      // "n"
  std::optional<double> rate;      // "r"
};

// Throws std::invalid_argument on malformed JSON, unknown keys,
// missing required keys, or wrong value types.
ParamFile parse_params(const std::string& json_text);
ParamFile load_params(const std::string& path);

std::string serialize_params(const ParamFile& pf);
void save_params(const ParamFile& pf, const std::string& path);

// Applies file-provided contract fields over the given defaults.
SwapSpec resolve_spec(const ParamFile& pf, const SwapSpec& defaults);

}  // namespace vswap
