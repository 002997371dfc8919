#include <doctest.h>

#include <cmath>
#include <limits>
#include <memory>
#include <vector>

#include "hetnet/fading.hpp"
#include "hetnet/rng.hpp"
#include "hetnet/specfun.hpp"

using namespace hetnet;
using fading::EffectiveFadingDistribution;
using fading::NakagamiFading;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("nakagami pdf") {
  NakagamiFading exp1(1.0, 1.0);
  CHECK(exp1.pdf(1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(exp1.pdf(0.0) == doctest::Approx(1.0));
  NakagamiFading m2(2.0, 1.0);
  CHECK(m2.pdf(1.0) == doctest::Approx(4.0 * std::exp(-2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(exp1.pdf(-0.5), std::domain_error);
  // m < 1: singular-density marker at the origin
  NakagamiFading severe(0.5, 1.0);
  CHECK(std::isinf(severe.pdf(0.0)));
}

TEST_CASE("nakagami cdf") {
  NakagamiFading exp1(1.0, 1.0);
  CHECK(exp1.cdf(1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-10));
  CHECK(exp1.cdf(0.0) == 0.0);
  NakagamiFading m15(1.5, 1.0);
  // independently verified by quadrature of the pdf
  const double by_quadrature = specfun::integrate(
      [&m15](double y) { return m15.pdf(y); }, 1e-12, 1.0);
  CHECK(by_quadrature == doctest::Approx(0.60837482372891).epsilon(1e-6));
  CHECK(m15.cdf(1.0) == doctest::Approx(0.60837482372891).epsilon(1e-9));
  CHECK_THROWS_AS(exp1.cdf(-1.0), std::domain_error);
}

TEST_CASE("nakagami construction errors") {
  CHECK_THROWS_AS(NakagamiFading(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(NakagamiFading(1.0, -1.0), std::domain_error);
}

TEST_CASE("sampler mean and determinism") {
  const int n = 100000;
  {
    NakagamiFading model(1.0, 1.0);
    rng::Stream s(rng::derive_key({42, 0}));
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += model.sample(s);
    CHECK(sum / n == doctest::Approx(1.0).epsilon(0.01));
  }
  {
    NakagamiFading model(4.0, 2.0);
    rng::Stream s(rng::derive_key({42, 1}));
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += model.sample(s);
    CHECK(sum / n == doctest::Approx(2.0).epsilon(0.005));
  }
  {
    NakagamiFading model(0.7, 1.3);
    rng::Stream a(123);
    rng::Stream b(123);
    for (int i = 0; i < 100; ++i) CHECK(model.sample(a) == model.sample(b));
  }
}

TEST_CASE("effective pdf, general route") {
  auto model = std::make_shared<NakagamiFading>(1.0, 1.0);
  EffectiveFadingDistribution eff(model, 4.0);
  // D = Gamma(1/2) for m=1, alpha=4
  CHECK(eff.normalizer() == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-7));
  CHECK(eff.pdf(1.0) ==
        doctest::Approx(std::exp(-1.0) / std::tgamma(1.5)).epsilon(1e-7));
  CHECK(eff.pdf(0.0) == 0.0);
  CHECK_THROWS_AS(EffectiveFadingDistribution(model, 2.0), std::domain_error);
}

TEST_CASE("normalizer identity D = (alpha/2) E[h^{2/alpha}]") {
  for (double m : {0.5, 1.0, 3.0}) {
    for (double alpha : {2.5, 4.0}) {
      auto model = std::make_shared<NakagamiFading>(m, 1.0);
      EffectiveFadingDistribution eff(model, alpha);
      const double moment = specfun::integrate(
          [&](double y) { return std::pow(y, 2.0 / alpha) * model->pdf(y); },
          0.0, kInf);
      CHECK(eff.normalizer() ==
            doctest::Approx(alpha / 2.0 * moment).epsilon(1e-6));
    }
  }
}

TEST_CASE("closed form matches the general route") {
  for (double m : {0.5, 1.0, 5.0}) {
    for (double alpha : {2.5, 4.0, 6.0}) {
      auto model = std::make_shared<NakagamiFading>(m, 1.0);
      EffectiveFadingDistribution eff(model, alpha);
      for (double y : {0.01, 0.5, 1.0, 5.0, 20.0}) {
        CHECK(eff.pdf(y) ==
              doctest::Approx(fading::effective_pdf_nakagami(m, 1.0, alpha, y))
                  .epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("effective nakagami closed form") {
  CHECK(fading::effective_pdf_nakagami(1.0, 1.0, 4.0, 1.0) ==
        doctest::Approx(std::exp(-1.0) / std::tgamma(1.5)).epsilon(1e-12));
  // mean = shape * scale = (m + 2/alpha) * omega/m, checked by quadrature
  const double mean = specfun::integrate(
      [](double y) { return y * fading::effective_pdf_nakagami(1.0, 1.0, 4.0, y); },
      0.0, kInf);
  CHECK(mean == doctest::Approx(1.5).epsilon(1e-7));
  // shape gain 2/alpha vanishes as alpha grows
  for (double y : {0.5, 1.0, 2.0}) {
    CHECK(fading::effective_pdf_nakagami(1.0, 1.0, 1e9, y) ==
          doctest::Approx(std::exp(-y)).epsilon(1e-4));
  }
}

TEST_CASE("effective cdf") {
  auto model = std::make_shared<NakagamiFading>(1.0, 1.0);
  EffectiveFadingDistribution eff(model, 4.0);
  CHECK(eff.cdf(0.0) == 0.0);
  CHECK(eff.cdf(50.0) == doctest::Approx(1.0).epsilon(1e-6));
  // verified by quadrature of the closed-form pdf (and the regularized
  // incomplete gamma): gamma(1.5, 1.5)/Gamma(1.5)
  CHECK(eff.cdf(1.5) == doctest::Approx(0.60837482372891).epsilon(1e-6));
  CHECK(fading::effective_cdf_nakagami(1.0, 1.0, 4.0, 1.5) ==
        doctest::Approx(0.60837482372891).epsilon(1e-9));
}

TEST_CASE("normalization over the (m, alpha) grid") {
  for (double m : {0.5, 1.0, 2.0, 5.0}) {
    for (double alpha : {2.5, 3.0, 4.0, 6.0}) {
      auto model = std::make_shared<NakagamiFading>(m, 1.0);
      EffectiveFadingDistribution eff(model, alpha);
      const double mass = specfun::integrate(
          [&eff](double y) { return eff.pdf(y); }, 0.0, kInf);
      CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
    }
  }
}

TEST_CASE("effective fading stochastically dominates the original") {
  for (double m : {0.5, 1.0, 2.0, 5.0}) {
    for (double alpha : {2.5, 4.0, 6.0}) {
      NakagamiFading model(m, 1.0);
      for (double y = 0.1; y <= 10.0; y += 0.3) {
        CHECK(fading::effective_cdf_nakagami(m, 1.0, alpha, y) <=
              model.cdf(y) + 1e-12);
      }
    }
  }
}

TEST_CASE("shape-gain law recovered from exact draws") {
  // Fit Gamma by moments to 10^6 draws from the closed-form effective
  // distribution: shape estimate = mean^2 / variance.
  const double m = 1.0, alpha = 4.0;
  const double shape = m + 2.0 / alpha;
  rng::Stream s(rng::derive_key({7, 7}));
  const int n = 1000000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = s.next_gamma(shape, 1.0 / m);
    sum += x;
    sumsq += x * x;
  }
  const double mean = sum / n;
  const double var = sumsq / n - mean * mean;
  CHECK(mean * mean / var == doctest::Approx(shape).epsilon(0.01));
}
