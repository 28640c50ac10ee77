#pragma once

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "circumnav/scenario.hpp"

namespace circumnav {

namespace detail {

inline double require_number(const nlohmann::json& j, const char* key) {
  if (!j.at(key).is_number()) {
    throw std::invalid_argument(std::string("config: '") + key + "' must be a number");
  }
  return j.at(key).get<double>();
}

}  // namespace detail

/// Parses "truth" or "filter:<tau>".
inline RdotSource parse_rdot_source(const std::string& text) {
  if (text == "truth") return {false, 0.5};
  if (text.rfind("filter:", 0) == 0) {
    std::size_t used = 0;
    const std::string arg = text.substr(7);
    const double tau = std::stod(arg, &used);
    if (used != arg.size() || !(tau > 0.0)) {
      throw std::invalid_argument("config: rdot filter tau must be a positive number");
    }
    return {true, tau};
  }
  throw std::invalid_argument("config: rdot_source must be 'truth' or 'filter:<tau>'");
}

inline ControlLaw parse_law(const std::string& text) {
  if (text == "smooth") return ControlLaw::Smooth;
  if (text == "signum" || text == "sign") return ControlLaw::Signum;
  throw std::invalid_argument("config: law must be 'smooth' or 'signum'");
}

/// Parses a flat JSON scenario. Required keys: v, target, r_d, k, law, dt,
/// duration, seed, runs and exactly one of init_box / init_state. Optional:
/// compensate_rd, rdot_source, scheme. Unknown keys are an error.
inline ScenarioConfig parse_scenario_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");

  static const std::set<std::string> known = {
      "v",        "target",   "r_d",  "k",    "law",        "compensate_rd",
      "rdot_source", "dt",    "scheme", "duration", "init_box", "init_state",
      "seed",     "runs"};
  for (const auto& item : j.items()) {
    if (!known.count(item.key())) {
      throw std::invalid_argument("config: unknown key '" + item.key() + "'");
    }
  }
  for (const char* key : {"v", "target", "r_d", "k", "law", "dt", "duration", "seed", "runs"}) {
    if (!j.contains(key)) {
      throw std::invalid_argument(std::string("config: missing required key '") + key + "'");
    }
  }
  const bool has_box = j.contains("init_box");
  const bool has_state = j.contains("init_state");
  if (has_box == has_state) {
    throw std::invalid_argument("config: exactly one of init_box / init_state is required");
  }

  ScenarioConfig cfg;
  cfg.speed = detail::require_number(j, "v");
  const auto& target = j.at("target");
  if (!target.is_array() || target.size() != 2) {
    throw std::invalid_argument("config: target must be [x, y]");
  }
  cfg.target = {target.at(0).get<double>(), target.at(1).get<double>()};
  cfg.desired_radius = detail::require_number(j, "r_d");
  cfg.gain = detail::require_number(j, "k");
  cfg.law = parse_law(j.at("law").get<std::string>());
  if (j.contains("compensate_rd")) cfg.compensate_rd = j.at("compensate_rd").get<bool>();
  if (j.contains("rdot_source")) cfg.rdot = parse_rdot_source(j.at("rdot_source").get<std::string>());
  cfg.integration.dt = detail::require_number(j, "dt");
  if (j.contains("scheme")) {
    const std::string scheme = j.at("scheme").get<std::string>();
    if (scheme == "rk4") {
      cfg.integration.scheme = IntegrationScheme::RK4;
    } else if (scheme == "euler") {
      cfg.integration.scheme = IntegrationScheme::Euler;
    } else {
      throw std::invalid_argument("config: scheme must be 'rk4' or 'euler'");
    }
  }
  cfg.duration = detail::require_number(j, "duration");
  if (has_box) {
    const auto& box = j.at("init_box");
    if (!box.is_array() || box.size() != 4) {
      throw std::invalid_argument("config: init_box must be [x_min, x_max, y_min, y_max]");
    }
    cfg.init = InitBox{box.at(0).get<double>(), box.at(1).get<double>(),
                       box.at(2).get<double>(), box.at(3).get<double>()};
  } else {
    const auto& st = j.at("init_state");
    if (!st.is_array() || st.size() != 3) {
      throw std::invalid_argument("config: init_state must be [x, y, psi]");
    }
    cfg.init = UavState{{st.at(0).get<double>(), st.at(1).get<double>()},
                        wrap_angle(st.at(2).get<double>())};
  }
  if (!j.at("seed").is_number_unsigned()) {
    throw std::invalid_argument("config: seed must be a nonnegative integer");
  }
  cfg.seed = j.at("seed").get<std::uint64_t>();
  if (!j.at("runs").is_number_integer()) {
    throw std::invalid_argument("config: runs must be an integer");
  }
  cfg.runs = j.at("runs").get<int>();
  return cfg;
}

inline ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open config file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_json(buf.str());
}

}  // namespace circumnav
