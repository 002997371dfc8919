#include "hetnet/config.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hetnet::config {

namespace {

using nlohmann::json;

double require_number(const json& obj, const std::string& field,
                      const std::string& context) {
  if (!obj.contains(field)) {
    throw ConfigError(context + "." + field + ": missing required field");
  }
  if (!obj[field].is_number()) {
    throw ConfigError(context + "." + field + ": must be a number");
  }
  return obj[field].get<double>();
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config root must be an object");

  ExperimentConfig cfg;
  cfg.network.alpha = require_number(root, "alpha", "config");
  if (!(cfg.network.alpha > 2.0)) {
    throw ConfigError("config.alpha: must exceed 2");
  }

  if (!root.contains("tiers") || !root["tiers"].is_array()) {
    throw ConfigError("config.tiers: must be a non-empty array");
  }
  const auto& tiers = root["tiers"];
  if (tiers.empty()) {
    throw ConfigError("config.tiers: at least one tier required");
  }
  for (std::size_t i = 0; i < tiers.size(); ++i) {
    const std::string ctx = "config.tiers[" + std::to_string(i) + "]";
    if (!tiers[i].is_object()) throw ConfigError(ctx + ": must be an object");
    association::TierConfig tier;
    tier.density = require_number(tiers[i], "density", ctx);
    tier.power = require_number(tiers[i], "power", ctx);
    if (!(tier.density > 0.0)) throw ConfigError(ctx + ".density: must be > 0");
    if (!(tier.power > 0.0)) throw ConfigError(ctx + ".power: must be > 0");
    cfg.network.tiers.push_back(tier);
  }

  if (!root.contains("fading") || !root["fading"].is_object()) {
    throw ConfigError("config.fading: must be an object");
  }
  const auto& fad = root["fading"];
  if (!fad.contains("type") || !fad["type"].is_string()) {
    throw ConfigError("config.fading.type: must be a string");
  }
  if (fad["type"].get<std::string>() != "nakagami") {
    throw ConfigError("config.fading.type: unsupported type \"" +
                      fad["type"].get<std::string>() +
                      "\" (expected \"nakagami\")");
  }
  cfg.fading_m = require_number(fad, "m", "config.fading");
  cfg.fading_omega = require_number(fad, "omega", "config.fading");
  if (!(cfg.fading_m > 0.0)) throw ConfigError("config.fading.m: must be > 0");
  if (!(cfg.fading_omega > 0.0)) {
    throw ConfigError("config.fading.omega: must be > 0");
  }
  return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string config_to_json(const ExperimentConfig& cfg) {
  json root;
  root["alpha"] = cfg.network.alpha;
  root["tiers"] = json::array();
  for (const auto& t : cfg.network.tiers) {
    root["tiers"].push_back({{"density", t.density}, {"power", t.power}});
  }
  root["fading"] = {
      {"type", "nakagami"}, {"m", cfg.fading_m}, {"omega", cfg.fading_omega}};
  return root.dump();
}

}  // namespace hetnet::config
