#include "vswap/params_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace vswap {

namespace {

using nlohmann::json;

double require_number(const json& j, const std::string& key) {
  if (!j.contains(key)) throw std::invalid_argument("missing key: " + key);
  const json& v = j.at(key);
  if (!v.is_number()) throw std::invalid_argument("key is not a number: " + key);
  return v.get<double>();
}

}  // namespace

ParamFile parse_params(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("top level must be an object");
  if (!j.contains("model") || !j.at("model").is_string()) {
    throw std::invalid_argument("missing string key: model");
  }
  const std::string model = j.at("model").get<std::string>();

  std::set<std::string> allowed = {"model", "rho", "v0", "T", "n", "r"};
  if (model == "heston" || model == "schobelzhu") {
    allowed.insert({"kappa", "theta", "gamma"});
  } else if (model == "hullwhite") {
    allowed.insert({"mu", "sigma"});
  } else {
    throw std::invalid_argument("unknown model: " + model);
  }
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key())) {
      throw std::invalid_argument("unknown key: " + item.key());
    }
  }

  ParamFile pf;
  if (model == "heston") {
    HestonParams p;
    p.kappa = require_number(j, "kappa");
    p.theta = require_number(j, "theta");
    p.gamma = require_number(j, "gamma");
    p.rho = require_number(j, "rho");
    p.v0 = require_number(j, "v0");
    pf.model = p;
  } else if (model == "hullwhite") {
    HullWhiteParams p;
    p.mu = require_number(j, "mu");
    p.sigma = require_number(j, "sigma");
    p.rho = require_number(j, "rho");
    p.v0 = require_number(j, "v0");
    pf.model = p;
  } else {
    SchobelZhuParams p;
    p.kappa = require_number(j, "kappa");
    p.theta = require_number(j, "theta");
    p.gamma = require_number(j, "gamma");
    p.rho = require_number(j, "rho");
    p.v0 = require_number(j, "v0");
    pf.model = p;
  }

  if (j.contains("T")) pf.maturity = require_number(j, "T");
  if (j.contains("n")) {
    const json& v = j.at("n");
    if (!v.is_number_integer()) {
      throw std::invalid_argument("key n must be an integer");
    }
    pf.periods = v.get<int>();
  }
  if (j.contains("r")) pf.rate = require_number(j, "r");
  return pf;
}

ParamFile load_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open parameter file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_params(ss.str());
}

std::string serialize_params(const ParamFile& pf) {
  json j;
  switch (model_kind(pf.model)) {
    case ModelKind::Heston: {
      const auto& p = std::get<HestonParams>(pf.model);
      j["model"] = "heston";
      j["kappa"] = p.kappa;
      j["theta"] = p.theta;
      j["gamma"] = p.gamma;
      j["rho"] = p.rho;
      j["v0"] = p.v0;
      break;
    }
    case ModelKind::HullWhite: {
      const auto& p = std::get<HullWhiteParams>(pf.model);
      j["model"] = "hullwhite";
      j["mu"] = p.mu;
      j["sigma"] = p.sigma;
      j["rho"] = p.rho;
      j["v0"] = p.v0;
      break;
    }
    case ModelKind::SchobelZhu: {
      const auto& p = std::get<SchobelZhuParams>(pf.model);
      j["model"] = "schobelzhu";
      j["kappa"] = p.kappa;
      j["theta"] = p.theta;
      j["gamma"] = p.gamma;
      j["rho"] = p.rho;
      j["v0"] = p.v0;
      break;
    }
  }
  if (pf.maturity) j["T"] = *pf.maturity;
  if (pf.periods) j["n"] = *pf.periods;
  if (pf.rate) j["r"] = *pf.rate;
  return j.dump(2) + "\n";
}

void save_params(const ParamFile& pf, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write parameter file: " + path);
  out << serialize_params(pf);
}

SwapSpec resolve_spec(const ParamFile& pf, const SwapSpec& defaults) {
  SwapSpec s = defaults;
  if (pf.maturity) s.maturity = *pf.maturity;
  if (pf.periods) s.periods = *pf.periods;
  if (pf.rate) s.rate = *pf.rate;
  return s;
}

}  // namespace vswap
