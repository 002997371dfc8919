#pragma once

#include <memory>
#include <stdexcept>

#include "hetnet/rng.hpp"
#include "hetnet/specfun.hpp"

namespace hetnet::fading {

// Distribution contract for a per-link power gain on [0, inf). Implementations
// must be immutable after construction; all evaluation methods are pure.
class FadingModel {
 public:
  virtual ~FadingModel() = default;

  virtual double pdf(double y) const = 0;
  virtual double cdf(double y) const = 0;
  virtual double ccdf(double y) const { return 1.0 - cdf(y); }
  virtual double mean() const = 0;
  virtual double sample(rng::Stream& stream) const = 0;
};

// Nakagami-m power gain: Gamma with shape m and scale omega/m, mean omega.
class NakagamiFading final : public FadingModel {
 public:
  NakagamiFading(double m, double omega) : m_(m), omega_(omega) {
    if (!(m > 0.0)) throw std::domain_error("nakagami: m must be > 0");
    if (!(omega > 0.0)) throw std::domain_error("nakagami: omega must be > 0");
  }

  double shape() const { return m_; }
  double omega() const { return omega_; }
  double mean() const override { return omega_; }

  // For m < 1 the density diverges at the origin; pdf(0) then returns +inf
  // as the singular-density marker.
  double pdf(double y) const override;
  double cdf(double y) const override;
  double ccdf(double y) const override;
  double sample(rng::Stream& stream) const override {
    return stream.next_gamma(m_, omega_ / m_);
  }

 private:
  double m_;
  double omega_;
};

// Fading gain on the link selected by strongest-BS association. Its density is
//   (alpha/2) y^{2/alpha} f_h(y) / D,  D = ∫₀^∞ ccdf(z) z^{2/alpha-1} dz.
// D depends only on (model, alpha) and is computed once at construction.
class EffectiveFadingDistribution {
 public:
  EffectiveFadingDistribution(std::shared_ptr<const FadingModel> model,
                              double alpha,
                              specfun::QuadratureSettings settings = {});

  double alpha() const { return alpha_; }
  double normalizer() const { return normalizer_; }
  const FadingModel& source_model() const { return *model_; }

  double pdf(double y) const;
  double cdf(double y) const;

 private:
  std::shared_ptr<const FadingModel> model_;
  double alpha_;
  specfun::QuadratureSettings settings_;
  double normalizer_;
};

/// Corollary closed form: Gamma(shape m + 2/alpha, scale omega/m) density.
double effective_pdf_nakagami(double m, double omega, double alpha, double y);

/// Matching closed-form CDF, the regularized lower incomplete gamma.
double effective_cdf_nakagami(double m, double omega, double alpha, double y);

}  // namespace hetnet::fading
