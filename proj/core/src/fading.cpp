#include "hetnet/fading.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace hetnet::fading {

double NakagamiFading::pdf(double y) const {
  if (!(y >= 0.0)) throw std::domain_error("nakagami pdf: y must be >= 0");
  if (y == 0.0) {
    if (m_ < 1.0) return std::numeric_limits<double>::infinity();
    if (m_ == 1.0) return 1.0 / omega_;
    return 0.0;
  }
  const double rate = m_ / omega_;
  return std::exp(m_ * std::log(rate) + (m_ - 1.0) * std::log(y) - rate * y -
                  std::lgamma(m_));
}

double NakagamiFading::cdf(double y) const {
  if (!(y >= 0.0)) throw std::domain_error("nakagami cdf: y must be >= 0");
  return specfun::regularized_gamma_p(m_, m_ / omega_ * y);
}

double NakagamiFading::ccdf(double y) const {
  if (!(y >= 0.0)) throw std::domain_error("nakagami ccdf: y must be >= 0");
  return specfun::regularized_gamma_q(m_, m_ / omega_ * y);
}

EffectiveFadingDistribution::EffectiveFadingDistribution(
    std::shared_ptr<const FadingModel> model, double alpha,
    specfun::QuadratureSettings settings)
    : model_(std::move(model)), alpha_(alpha), settings_(settings) {
  if (!model_) throw std::invalid_argument("effective fading: null model");
  if (!(alpha_ > 2.0)) {
    throw std::domain_error("effective fading: alpha must be > 2");
  }
  // D = ∫₀^∞ ccdf(z) z^{2/alpha-1} dz; the substitution z = u^{alpha/2}
  // removes the endpoint singularity: D = (alpha/2) ∫₀^∞ ccdf(u^{alpha/2}) du.
  const double half_alpha = alpha_ / 2.0;
  const FadingModel& m = *model_;
  normalizer_ =
      half_alpha * specfun::integrate(
                       [&m, half_alpha](double u) {
                         return m.ccdf(std::pow(u, half_alpha));
                       },
                       0.0, std::numeric_limits<double>::infinity(), settings_);
  if (!(normalizer_ > 0.0)) {
    throw std::domain_error("effective fading: normalizer must be > 0");
  }
}

double EffectiveFadingDistribution::pdf(double y) const {
  if (!(y >= 0.0)) throw std::domain_error("effective pdf: y must be >= 0");
  if (y == 0.0) return 0.0;
  return (alpha_ / 2.0) * std::pow(y, 2.0 / alpha_) * model_->pdf(y) /
         normalizer_;
}

double EffectiveFadingDistribution::cdf(double y) const {
  if (!(y >= 0.0)) throw std::domain_error("effective cdf: y must be >= 0");
  if (y == 0.0) return 0.0;
  // Substitute y' = v^{alpha/2} so a possible power singularity of the source
  // pdf at the origin is absorbed into a bounded integrand.
  const double half_alpha = alpha_ / 2.0;
  const double upper = std::pow(y, 2.0 / alpha_);
  const double value = specfun::integrate(
      [this, half_alpha](double v) {
        const double yp = std::pow(v, half_alpha);
        return pdf(yp) * half_alpha * std::pow(v, half_alpha - 1.0);
      },
      0.0, upper, settings_);
  return std::min(value, 1.0);
}

double effective_pdf_nakagami(double m, double omega, double alpha, double y) {
  if (!(m > 0.0) || !(omega > 0.0)) {
    throw std::domain_error("effective nakagami: m and omega must be > 0");
  }
  if (!(alpha > 2.0)) {
    throw std::domain_error("effective nakagami: alpha must be > 2");
  }
  if (!(y >= 0.0)) throw std::domain_error("effective nakagami: y must be >= 0");
  const double shape = m + 2.0 / alpha;
  const double rate = m / omega;
  if (y == 0.0) {
    if (shape < 1.0) return std::numeric_limits<double>::infinity();
    if (shape == 1.0) return rate;
    return 0.0;
  }
  return std::exp(shape * std::log(rate) + (shape - 1.0) * std::log(y) -
                  rate * y - std::lgamma(shape));
}

double effective_cdf_nakagami(double m, double omega, double alpha, double y) {
  if (!(m > 0.0) || !(omega > 0.0)) {
    throw std::domain_error("effective nakagami: m and omega must be > 0");
  }
  if (!(alpha > 2.0)) {
    throw std::domain_error("effective nakagami: alpha must be > 2");
  }
  if (!(y >= 0.0)) throw std::domain_error("effective nakagami: y must be >= 0");
  return specfun::regularized_gamma_p(m + 2.0 / alpha, m / omega * y);
}

}  // namespace hetnet::fading
