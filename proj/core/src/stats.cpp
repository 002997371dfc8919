#include "hetnet/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hetnet::stats {

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> samples)
    : samples_(std::move(samples)) {
  if (samples_.empty()) {
    throw std::invalid_argument("empirical distribution needs >= 1 sample");
  }
  std::sort(samples_.begin(), samples_.end());
}

double EmpiricalDistribution::cdf(double y) const {
  const auto it = std::upper_bound(samples_.begin(), samples_.end(), y);
  return static_cast<double>(it - samples_.begin()) /
         static_cast<double>(samples_.size());
}

Histogram histogram_density(const EmpiricalDistribution& dist, int bin_count,
                            double lo, double hi) {
  if (bin_count < 1) throw std::invalid_argument("bin_count must be >= 1");
  if (!(hi > lo)) throw std::invalid_argument("histogram range must be nonempty");
  Histogram h;
  h.bin_width = (hi - lo) / bin_count;
  std::vector<std::size_t> counts(bin_count, 0);
  std::size_t in_range = 0;
  for (double x : dist.sorted_samples()) {
    if (x < lo || x >= hi) continue;
    const auto idx = static_cast<std::size_t>((x - lo) / h.bin_width);
    counts[std::min(idx, static_cast<std::size_t>(bin_count - 1))]++;
    ++in_range;
  }
  const double n = static_cast<double>(dist.count());
  h.in_range_fraction = static_cast<double>(in_range) / n;
  h.bins.reserve(bin_count);
  for (int b = 0; b < bin_count; ++b) {
    h.bins.push_back({lo + (b + 0.5) * h.bin_width,
                      static_cast<double>(counts[b]) / (n * h.bin_width)});
  }
  return h;
}

double ks_critical_coefficient(double level) {
  if (!(level > 0.0) || !(level < 1.0)) {
    throw std::invalid_argument("significance level must be in (0,1)");
  }
  return std::sqrt(-0.5 * std::log(level / 2.0));
}

KsReport ks_one_sample(const EmpiricalDistribution& dist,
                       const std::function<double(double)>& cdf,
                       double level) {
  const auto& xs = dist.sorted_samples();
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    const double upper = (static_cast<double>(i) + 1.0) / n - f;
    const double lower = f - static_cast<double>(i) / n;
    d = std::max({d, upper, lower});
  }
  KsReport report;
  report.statistic = d;
  report.significance_level = level;
  report.critical_value = ks_critical_coefficient(level) / std::sqrt(n);
  report.pass = report.statistic < report.critical_value;
  report.n_a = xs.size();
  report.small_sample_warning = xs.size() < 50;
  return report;
}

KsReport ks_two_sample(const EmpiricalDistribution& a,
                       const EmpiricalDistribution& b, double level) {
  const auto& xa = a.sorted_samples();
  const auto& xb = b.sorted_samples();
  const double na = static_cast<double>(xa.size());
  const double nb = static_cast<double>(xb.size());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < xa.size() && j < xb.size()) {
    const double x = std::min(xa[i], xb[j]);
    while (i < xa.size() && xa[i] <= x) ++i;
    while (j < xb.size() && xb[j] <= x) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / na -
                              static_cast<double>(j) / nb));
  }
  KsReport report;
  report.statistic = d;
  report.significance_level = level;
  report.critical_value =
      ks_critical_coefficient(level) * std::sqrt((na + nb) / (na * nb));
  report.pass = report.statistic < report.critical_value;
  report.n_a = xa.size();
  report.n_b = xb.size();
  report.small_sample_warning = xa.size() < 50 || xb.size() < 50;
  return report;
}

}  // namespace hetnet::stats
