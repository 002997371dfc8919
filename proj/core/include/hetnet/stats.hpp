#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace hetnet::stats {

class EmpiricalDistribution {
 public:
  explicit EmpiricalDistribution(std::vector<double> samples);

  std::size_t count() const { return samples_.size(); }
  const std::vector<double>& sorted_samples() const { return samples_; }

  /// Right-continuous step CDF: fraction of samples <= y.
  double cdf(double y) const;

 private:
  std::vector<double> samples_;  // ascending
};

struct HistogramBin {
  double center;
  double density;
};

struct Histogram {
  std::vector<HistogramBin> bins;
  double bin_width = 0.0;
  double in_range_fraction = 1.0;
};

Histogram histogram_density(const EmpiricalDistribution& dist, int bin_count,
                            double lo, double hi);

struct KsReport {
  double statistic = 0.0;
  double critical_value = 0.0;
  double significance_level = 0.0;
  bool pass = false;
  std::size_t n_a = 0;
  std::size_t n_b = 0;           // 0 for one-sample tests
  bool small_sample_warning = false;  // asymptotic critical value, N < 50
};

// Asymptotic Kolmogorov critical coefficient: c = sqrt(-ln(level/2)/2);
// c(0.01) = 1.628, c(0.05) = 1.358.
double ks_critical_coefficient(double level);

/// One-sample KS against a hypothesized CDF, sup taken exactly at the order
/// statistics (both one-sided gaps).
KsReport ks_one_sample(const EmpiricalDistribution& dist,
                       const std::function<double(double)>& cdf, double level);

KsReport ks_two_sample(const EmpiricalDistribution& a,
                       const EmpiricalDistribution& b, double level);

}  // namespace hetnet::stats
