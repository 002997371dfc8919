#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace hetnet::specfun {

struct QuadratureSettings {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  int max_subdivisions = 4000;

  void validate() const {
    if (rel_tol <= 0.0 || abs_tol <= 0.0) {
      throw std::invalid_argument("quadrature tolerances must be positive");
    }
    if (max_subdivisions < 1) {
      throw std::invalid_argument("max_subdivisions must be >= 1");
    }
  }
};

// Thrown when adaptive refinement exhausts its subdivision budget. Carries the
// best estimate so callers can decide whether it is still usable.
class IntegrationFailure : public std::runtime_error {
 public:
  IntegrationFailure(double estimate, double error_bound)
      : std::runtime_error("quadrature did not converge (estimate " +
                           std::to_string(estimate) + ", error bound " +
                           std::to_string(error_bound) + ")"),
        estimate(estimate),
        error_bound(error_bound) {}

  double estimate;
  double error_bound;
};

/// Lower incomplete gamma γ(a,x) = ∫₀ˣ t^{a−1} e^{−t} dt.
double lower_incomplete_gamma(double a, double x);

/// Upper incomplete gamma Γ(a,x) = ∫ₓ^∞ t^{a−1} e^{−t} dt.
double upper_incomplete_gamma(double a, double x);

/// Regularized versions, P(a,x) = γ(a,x)/Γ(a) and Q(a,x) = Γ(a,x)/Γ(a).
double regularized_gamma_p(double a, double x);
double regularized_gamma_q(double a, double x);

// Adaptive Gauss-Kronrod (G7,K15) quadrature. A semi-infinite upper limit is
// mapped onto (0,1) via y = lo + t/(1-t). Endpoint singularities integrable in
// the y^{c} sense with c > -1 are admissible: nodes never touch the endpoints
// and refinement concentrates where the error estimate is largest.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureSettings& settings = {});

}  // namespace hetnet::specfun
