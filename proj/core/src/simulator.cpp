#include "hetnet/simulator.hpp"

#include <cmath>
#include <stdexcept>

namespace hetnet::simulator {

namespace {

constexpr std::uint64_t kDistanceDraw = 0;
constexpr std::uint64_t kFadingDraw = 1;

}  // namespace

std::vector<double> sample_ordered_distances(double density, int count,
                                             rng::Stream& stream) {
  if (!(density > 0.0)) throw std::domain_error("density must be > 0");
  if (count < 1) throw std::domain_error("count must be >= 1");
  std::vector<double> distances(count);
  const double lambda_pi = density * M_PI;
  double area = 0.0;  // lambda*pi*r_n^2, a unit-rate Poisson arrival sequence
  for (int n = 0; n < count; ++n) {
    area += stream.next_exponential();
    distances[n] = std::sqrt(area / lambda_pi);
  }
  return distances;
}

EffectiveFadingSample run_trial(const association::NetworkConfig& config,
                                const fading::FadingModel& model, int n_max,
                                std::uint64_t seed, std::uint64_t trial,
                                std::vector<double>* gains_out) {
  config.validate();
  if (n_max < 1) throw std::domain_error("n_max must be >= 1");

  EffectiveFadingSample best{0.0, 0, 0, 0.0};
  double best_power = -1.0;
  const double alpha = config.alpha;
  for (std::size_t k = 0; k < config.tier_count(); ++k) {
    const double lambda_pi = config.tiers[k].density * M_PI;
    const double power_k = config.tiers[k].power;
    double area = 0.0;
    for (int i = 0; i < n_max; ++i) {
      rng::Stream dist_stream(rng::derive_key(
          {seed, trial, static_cast<std::uint64_t>(k),
           static_cast<std::uint64_t>(i), kDistanceDraw}));
      area += dist_stream.next_exponential();
      const double r = std::sqrt(area / lambda_pi);

      rng::Stream fade_stream(rng::derive_key(
          {seed, trial, static_cast<std::uint64_t>(k),
           static_cast<std::uint64_t>(i), kFadingDraw}));
      const double h = model.sample(fade_stream);
      if (gains_out) gains_out->push_back(h);

      const double received = power_k * h * std::pow(r, -alpha);
      // Strict > keeps the first maximizer: ties (measure zero) resolve to
      // the lowest tier index, then the lowest order index.
      if (received > best_power) {
        best_power = received;
        best = {h, static_cast<int>(k) + 1, i + 1, r};
      }
    }
  }
  return best;
}

SimulationResult run_campaign(const association::NetworkConfig& config,
                              const fading::FadingModel& model,
                              std::uint64_t trials, int n_max,
                              std::uint64_t seed,
                              bool collect_original_gains) {
  config.validate();
  if (trials < 1) throw std::domain_error("trials must be >= 1");

  SimulationResult result;
  result.config = config;
  result.seed = seed;
  result.trials = trials;
  result.n_max = n_max;
  if (const auto* nak = dynamic_cast<const fading::NakagamiFading*>(&model)) {
    result.fading_m = nak->shape();
    result.fading_omega = nak->omega();
  }
  result.samples.reserve(trials);
  if (collect_original_gains) {
    result.original_gains.reserve(trials * config.tier_count() * n_max);
  }
  for (std::uint64_t t = 0; t < trials; ++t) {
    result.samples.push_back(
        run_trial(config, model, n_max, seed, t,
                  collect_original_gains ? &result.original_gains : nullptr));
  }
  return result;
}

}  // namespace hetnet::simulator
