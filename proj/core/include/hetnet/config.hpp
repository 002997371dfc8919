#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "hetnet/association.hpp"
#include "hetnet/fading.hpp"

namespace hetnet::config {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  association::NetworkConfig network;
  double fading_m = 1.0;
  double fading_omega = 1.0;

  std::shared_ptr<const fading::NakagamiFading> make_model() const {
    return std::make_shared<fading::NakagamiFading>(fading_m, fading_omega);
  }
};

// Parses {"alpha": ..., "tiers": [{"density":..,"power":..},...],
//         "fading": {"type":"nakagami","m":..,"omega":..}}.
// Violations throw ConfigError naming the offending field and constraint.
ExperimentConfig parse_config(const std::string& text);

ExperimentConfig load_config_file(const std::string& path);

std::string config_to_json(const ExperimentConfig& cfg);

}  // namespace hetnet::config
