#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "hetnet/fading.hpp"
#include "hetnet/specfun.hpp"

namespace hetnet::association {

struct TierConfig {
  double density;  // BSs per unit area
  double power;    // transmit power, linear units

  void validate() const {
    if (!(density > 0.0)) throw std::domain_error("tier density must be > 0");
    if (!(power > 0.0)) throw std::domain_error("tier power must be > 0");
  }
};

struct NetworkConfig {
  std::vector<TierConfig> tiers;
  double alpha;  // pathloss exponent, > 2

  std::size_t tier_count() const { return tiers.size(); }

  void validate() const {
    if (tiers.empty()) throw std::domain_error("at least one tier required");
    if (!(alpha > 2.0)) throw std::domain_error("alpha must be > 2");
    for (const auto& t : tiers) t.validate();
  }
};

// Single-tier networks have an empty cross-tier sum, so the bias is infinite;
// +inf is the exact marker (1/bias = 0 drops the cross-tier term downstream).
constexpr double kInfiniteBias = std::numeric_limits<double>::infinity();

/// Tier bias B_k = lambda_k P_k^{2/a} / sum_{j != k} lambda_j P_j^{2/a}.
double tier_bias(const NetworkConfig& config, std::size_t k);

/// Unconditional tier association probability B~_k = B_k/(B_k+1); sums to 1.
double tier_assoc_prob(const NetworkConfig& config, std::size_t k);

// The pair (g1, g2) conditioning the per-order association probability on the
// serving link's fading gain h.
struct GPair {
  double g1;
  double g2;
  double conditioning_gain;
  std::size_t tier_index = 0;
};

/// g1, g2 by direct quadrature of their integral definitions.
GPair g_pair_general(const fading::FadingModel& model, double alpha, double h,
                     double bias,
                     const specfun::QuadratureSettings& settings = {});

/// Closed forms for Nakagami-m fading, in incomplete gamma functions.
GPair g_pair_nakagami(double m, double omega, double alpha, double h,
                      double bias);

/// Dispatches to the closed form when the model is Nakagami.
GPair g_pair(const fading::FadingModel& model, double alpha, double h,
             double bias, const specfun::QuadratureSettings& settings = {});

/// Conditional probability of serving from the n-th nearest BS of the tier:
/// (1/(g2+1))^n g1^(n-1).
double conditional_assoc_prob(const GPair& g, int n);

/// Geometric-series total over n: 1/(1 + g2 - g1).
double conditional_assoc_total(const GPair& g);

struct AssociationTable {
  // entries[k][n-1] = unconditional P_{(k,n)}, h marginalized out.
  std::vector<std::vector<double>> entries;
  double truncation_mass = 0.0;  // 1 - sum of all entries

  std::vector<double> row_sums() const;
  double total() const;
};

AssociationTable assoc_prob_table(const NetworkConfig& config,
                                  const fading::FadingModel& model, int n_max,
                                  const specfun::QuadratureSettings& settings = {});

}  // namespace hetnet::association
