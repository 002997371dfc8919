#pragma once

#include <cstdint>
#include <vector>

#include "hetnet/association.hpp"
#include "hetnet/fading.hpp"
#include "hetnet/rng.hpp"

namespace hetnet::simulator {

// One Monte Carlo trial's outcome. Tier and order indices are 1-based to
// match the (k, n) bookkeeping of the association table.
struct EffectiveFadingSample {
  double h_star;
  int serving_tier;
  int serving_order;
  double serving_distance;
};

struct SimulationResult {
  std::vector<EffectiveFadingSample> samples;
  association::NetworkConfig config;
  double fading_m = 0.0;
  double fading_omega = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  int n_max = 0;
  // All per-link gains drawn during the campaign, in deterministic order.
  // Populated only on request (trials * K * n_max values).
  std::vector<double> original_gains;
};

/// Ordered distances r_1 < ... < r_count from the origin to the points of a
/// planar PPP, sampled exactly via cumulative unit-exponential increments of
/// lambda*pi*r^2.
std::vector<double> sample_ordered_distances(double density, int count,
                                             rng::Stream& stream);

// Per-trial randomness is addressed by (seed, trial, tier, bs, purpose): each
// draw has its own counter-based stream, so enlarging n_max extends a trial
// with new candidates while leaving the existing ones bit-identical.
EffectiveFadingSample run_trial(const association::NetworkConfig& config,
                                const fading::FadingModel& model, int n_max,
                                std::uint64_t seed, std::uint64_t trial,
                                std::vector<double>* gains_out = nullptr);

SimulationResult run_campaign(const association::NetworkConfig& config,
                              const fading::FadingModel& model,
                              std::uint64_t trials, int n_max,
                              std::uint64_t seed,
                              bool collect_original_gains = false);

}  // namespace hetnet::simulator
