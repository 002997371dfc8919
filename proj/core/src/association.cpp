#include "hetnet/association.hpp"

#include <cmath>

namespace hetnet::association {

namespace {

double tier_weight(const TierConfig& t, double alpha) {
  return t.density * std::pow(t.power, 2.0 / alpha);
}

void check_tier_index(const NetworkConfig& config, std::size_t k) {
  if (k >= config.tier_count()) {
    throw std::out_of_range("tier index out of range");
  }
}

}  // namespace

double tier_bias(const NetworkConfig& config, std::size_t k) {
  config.validate();
  check_tier_index(config, k);
  double cross = 0.0;
  for (std::size_t j = 0; j < config.tier_count(); ++j) {
    if (j != k) cross += tier_weight(config.tiers[j], config.alpha);
  }
  if (cross == 0.0) return kInfiniteBias;
  return tier_weight(config.tiers[k], config.alpha) / cross;
}

double tier_assoc_prob(const NetworkConfig& config, std::size_t k) {
  config.validate();
  check_tier_index(config, k);
  double total = 0.0;
  for (const auto& t : config.tiers) total += tier_weight(t, config.alpha);
  return tier_weight(config.tiers[k], config.alpha) / total;
}

GPair g_pair_general(const fading::FadingModel& model, double alpha, double h,
                     double bias, const specfun::QuadratureSettings& settings) {
  if (!(h > 0.0)) throw std::domain_error("g_pair: h must be > 0");
  if (!(alpha > 2.0)) throw std::domain_error("g_pair: alpha must be > 2");
  const double half_alpha = alpha / 2.0;
  const double inf = std::numeric_limits<double>::infinity();
  // The substitution y = u^{alpha/2} turns (2/alpha) y^{2/alpha-1} dy into du,
  // removing the endpoint singularity of every integral below.
  auto cdf_sub = [&](double u) { return model.cdf(std::pow(u, half_alpha) * h); };
  auto ccdf_sub = [&](double u) {
    return model.ccdf(std::pow(u, half_alpha) * h);
  };
  const double g1 = specfun::integrate(cdf_sub, 0.0, 1.0, settings);
  double g2 = specfun::integrate(ccdf_sub, 1.0, inf, settings);
  if (!std::isinf(bias)) {
    g2 += specfun::integrate(ccdf_sub, 0.0, inf, settings) / bias;
  }
  return {g1, g2, h, 0};
}

GPair g_pair_nakagami(double m, double omega, double alpha, double h,
                      double bias) {
  if (!(h > 0.0)) throw std::domain_error("g_pair: h must be > 0");
  if (!(alpha > 2.0)) throw std::domain_error("g_pair: alpha must be > 2");
  if (!(m > 0.0) || !(omega > 0.0)) {
    throw std::domain_error("g_pair: m and omega must be > 0");
  }
  const double two_over_alpha = 2.0 / alpha;
  const double x = m / omega * h;
  const double scale_pow = std::pow(omega / (m * h), two_over_alpha);
  const double gamma_m = std::exp(std::lgamma(m));
  const double lower_shifted =
      specfun::lower_incomplete_gamma(m + two_over_alpha, x);
  const double upper_shifted =
      specfun::upper_incomplete_gamma(m + two_over_alpha, x);
  const double upper_m = specfun::upper_incomplete_gamma(m, x);
  const double g1 = 1.0 - (scale_pow * lower_shifted + upper_m) / gamma_m;
  double cross = 0.0;
  if (!std::isinf(bias)) {
    cross = std::exp(std::lgamma(m + two_over_alpha)) / bias;
  }
  const double g2 =
      (scale_pow * (upper_shifted + cross) - upper_m) / gamma_m;
  return {g1, g2, h, 0};
}

GPair g_pair(const fading::FadingModel& model, double alpha, double h,
             double bias, const specfun::QuadratureSettings& settings) {
  if (const auto* nak = dynamic_cast<const fading::NakagamiFading*>(&model)) {
    return g_pair_nakagami(nak->shape(), nak->omega(), alpha, h, bias);
  }
  return g_pair_general(model, alpha, h, bias, settings);
}

double conditional_assoc_prob(const GPair& g, int n) {
  if (n < 1) throw std::domain_error("order index n must be >= 1");
  return std::pow(1.0 / (g.g2 + 1.0), n) * std::pow(g.g1, n - 1);
}

double conditional_assoc_total(const GPair& g) {
  return 1.0 / (1.0 + g.g2 - g.g1);
}

std::vector<double> AssociationTable::row_sums() const {
  std::vector<double> sums;
  sums.reserve(entries.size());
  for (const auto& row : entries) {
    double s = 0.0;
    for (double v : row) s += v;
    sums.push_back(s);
  }
  return sums;
}

double AssociationTable::total() const {
  double t = 0.0;
  for (const auto& s : row_sums()) t += s;
  return t;
}

AssociationTable assoc_prob_table(const NetworkConfig& config,
                                  const fading::FadingModel& model, int n_max,
                                  const specfun::QuadratureSettings& settings) {
  config.validate();
  if (n_max < 1) throw std::domain_error("n_max must be >= 1");
  const std::size_t num_tiers = config.tier_count();

  AssociationTable table;
  table.entries.assign(num_tiers, std::vector<double>(n_max, 0.0));

  // Outer h-integral: fixed composite Gauss-Kronrod over u in (0,1) with
  // h = mean * u/(1-u). All (k,n) entries share each node's g-pair, so the
  // whole table costs one sweep.
  constexpr int kPanels = 256;
  constexpr int kHalfNodes = 8;
  constexpr double nodes[kHalfNodes] = {
      0.991455371120813, 0.949107912342759, 0.864864423359769,
      0.741531185599394, 0.586087235467691, 0.405845151377397,
      0.207784955007898, 0.0};
  constexpr double weights[kHalfNodes] = {
      0.022935322010529, 0.063092092629979, 0.104790010322250,
      0.140653259715525, 0.169004726639267, 0.190350578064785,
      0.204432940075298, 0.209482141084728};

  const double scale = model.mean();
  std::vector<double> biases(num_tiers);
  for (std::size_t k = 0; k < num_tiers; ++k) biases[k] = tier_bias(config, k);

  auto accumulate_node = [&](double u, double w) {
    const double om = 1.0 - u;
    const double h = scale * u / om;
    if (!(h > 0.0) || std::isinf(h)) return;
    const double jac = scale / (om * om);
    const double fw = model.pdf(h) * jac * w;
    if (fw == 0.0) return;
    for (std::size_t k = 0; k < num_tiers; ++k) {
      const GPair g = g_pair(model, config.alpha, h, biases[k], settings);
      const double base = 1.0 / (g.g2 + 1.0);
      const double ratio = g.g1 * base;
      double cond = base;
      for (int n = 1; n <= n_max; ++n) {
        table.entries[k][n - 1] += fw * cond;
        cond *= ratio;
      }
    }
  };

  for (int p = 0; p < kPanels; ++p) {
    const double lo = static_cast<double>(p) / kPanels;
    const double hi = static_cast<double>(p + 1) / kPanels;
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    for (int i = 0; i < kHalfNodes; ++i) {
      const double dx = half * nodes[i];
      const double w = weights[i] * half;
      if (i == kHalfNodes - 1) {
        accumulate_node(mid, w);
      } else {
        accumulate_node(mid - dx, w);
        accumulate_node(mid + dx, w);
      }
    }
  }

  // The exact total is <= 1; a tiny negative residual is quadrature noise.
  table.truncation_mass = std::max(0.0, 1.0 - table.total());
  return table;
}

}  // namespace hetnet::association
