#include <doctest.h>

#include <cmath>
#include <limits>

#include "hetnet/association.hpp"
#include "hetnet/fading.hpp"
#include "hetnet/rng.hpp"

using namespace hetnet;
using namespace hetnet::association;

namespace {

NetworkConfig fig1_config() {
  return {{{1.0, 1.0}, {2.0, 2.0}}, 4.0};
}

NetworkConfig single_tier() { return {{{1.0, 1.0}}, 4.0}; }

}  // namespace

TEST_CASE("tier bias") {
  const auto cfg = fig1_config();
  CHECK(tier_bias(cfg, 0) == doctest::Approx(0.35355339059327).epsilon(1e-10));
  CHECK(tier_bias(cfg, 1) == doctest::Approx(2.82842712474619).epsilon(1e-10));
  CHECK(std::isinf(tier_bias(single_tier(), 0)));
  CHECK_THROWS_AS(tier_bias(cfg, 2), std::out_of_range);
}

TEST_CASE("tier association probability") {
  const auto cfg = fig1_config();
  CHECK(tier_assoc_prob(cfg, 0) ==
        doctest::Approx(0.26120387496374).epsilon(1e-10));
  CHECK(tier_assoc_prob(cfg, 1) ==
        doctest::Approx(0.73879612503626).epsilon(1e-10));
  CHECK(tier_assoc_prob(single_tier(), 0) == doctest::Approx(1.0));
}

TEST_CASE("tier probabilities sum to one for random configs") {
  rng::Stream s(99);
  for (std::size_t K : {1u, 2u, 3u, 5u}) {
    NetworkConfig cfg;
    cfg.alpha = 2.0 + 4.0 * s.next_double();
    for (std::size_t k = 0; k < K; ++k) {
      cfg.tiers.push_back({0.1 + 5.0 * s.next_double(),
                           0.1 + 10.0 * s.next_double()});
    }
    double total = 0.0;
    for (std::size_t k = 0; k < K; ++k) total += tier_assoc_prob(cfg, k);
    CHECK(std::fabs(total - 1.0) < 1e-12);
  }
}

TEST_CASE("closed-form g pair spot values") {
  const auto g = g_pair_nakagami(1.0, 1.0, 4.0, 1.0, kInfiniteBias);
  CHECK(g.g1 == doctest::Approx(0.25317586718757).epsilon(1e-7));
  CHECK(g.g2 == doctest::Approx(0.13940279264031).epsilon(1e-7));
  const auto gb = g_pair_nakagami(1.0, 1.0, 4.0, 1.0, 0.35355339059327);
  CHECK(gb.g2 == doctest::Approx(2.64603106727075).epsilon(1e-7));
}

TEST_CASE("quadrature route matches the closed form") {
  fading::NakagamiFading model(1.0, 1.0);
  const auto closed = g_pair_nakagami(1.0, 1.0, 4.0, 1.0, kInfiniteBias);
  const auto quad = g_pair_general(model, 4.0, 1.0, kInfiniteBias);
  CHECK(quad.g1 == doctest::Approx(closed.g1).epsilon(1e-8));
  CHECK(quad.g2 == doctest::Approx(closed.g2).epsilon(1e-8));
  // with a finite bias, including the cross-tier term
  const auto closed_b = g_pair_nakagami(0.8, 1.3, 3.0, 0.7, 1.5);
  fading::NakagamiFading model_b(0.8, 1.3);
  const auto quad_b = g_pair_general(model_b, 3.0, 0.7, 1.5);
  CHECK(quad_b.g1 == doctest::Approx(closed_b.g1).epsilon(1e-8));
  CHECK(quad_b.g2 == doctest::Approx(closed_b.g2).epsilon(1e-8));
}

TEST_CASE("g pair limits in h") {
  // F_h -> 1 and its complement -> 0 pointwise as h grows
  const auto g = g_pair_nakagami(1.0, 1.0, 4.0, 1e8, kInfiniteBias);
  CHECK(g.g1 == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(g.g2 == doctest::Approx(0.0).epsilon(1e-3));
}

TEST_CASE("conditional association probability") {
  GPair g{0.25317586718757, 2.64603106727075, 1.0, 0};
  CHECK(conditional_assoc_prob(g, 1) ==
        doctest::Approx(0.27427083904377).epsilon(1e-8));
  CHECK(conditional_assoc_prob(g, 2) ==
        doctest::Approx(0.01904502628694).epsilon(1e-8));
  CHECK_THROWS_AS(conditional_assoc_prob(g, 0), std::domain_error);
  GPair strongest{1.0, 0.0, 1e12, 0};
  CHECK(conditional_assoc_prob(strongest, 1) == doctest::Approx(1.0));
  // strictly decreasing in n
  for (int n = 1; n < 10; ++n) {
    CHECK(conditional_assoc_prob(g, n + 1) < conditional_assoc_prob(g, n));
  }
}

TEST_CASE("conditional total: geometric series and Appendix identity") {
  GPair g{0.25317586718757, 2.64603106727075, 1.0, 0};
  const double total = conditional_assoc_total(g);
  CHECK(total == doctest::Approx(0.29473701087376).epsilon(1e-8));
  double series = 0.0;
  for (int n = 1; n <= 50; ++n) series += conditional_assoc_prob(g, n);
  CHECK(series == doctest::Approx(total).epsilon(1e-10));

  // K=1: total = (alpha/2) h^{2/alpha} / D
  const auto g1t = g_pair_nakagami(1.0, 1.0, 4.0, 1.0, kInfiniteBias);
  CHECK(conditional_assoc_total(g1t) ==
        doctest::Approx(2.0 / std::sqrt(M_PI)).epsilon(1e-6));
}

TEST_CASE("identity 1+g2-g1 = (1/Btilde)(2/alpha) h^{-2/alpha} D") {
  const auto cfg = fig1_config();
  auto model = std::make_shared<fading::NakagamiFading>(1.0, 1.0);
  fading::EffectiveFadingDistribution eff(model, cfg.alpha);
  const double d = eff.normalizer();
  for (std::size_t k = 0; k < 2; ++k) {
    const double bias = tier_bias(cfg, k);
    const double btilde = tier_assoc_prob(cfg, k);
    for (double h : {0.1, 1.0, 10.0}) {
      const auto g = g_pair_nakagami(1.0, 1.0, cfg.alpha, h, bias);
      const double lhs = 1.0 + g.g2 - g.g1;
      const double rhs =
          (1.0 / btilde) * (2.0 / cfg.alpha) * std::pow(h, -2.0 / cfg.alpha) * d;
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-6));
    }
  }
}

TEST_CASE("conditional probability increases with density and power") {
  for (bool sweep_density : {true, false}) {
    double prev = 0.0;
    for (double v : {0.5, 1.0, 2.0, 4.0}) {
      NetworkConfig cfg{{{sweep_density ? v : 1.0, sweep_density ? 1.0 : v},
                         {1.0, 1.0}},
                        4.0};
      const auto g = g_pair_nakagami(1.0, 1.0, 4.0, 1.0, tier_bias(cfg, 0));
      const double p = conditional_assoc_prob(g, 1);
      CHECK(p > prev);
      prev = p;
    }
  }
}

TEST_CASE("association table") {
  fading::NakagamiFading model(1.0, 1.0);

  SUBCASE("single tier covers nearly all mass at n_max=100") {
    const auto table = assoc_prob_table(single_tier(), model, 100);
    CHECK(table.total() >= 0.999);
    CHECK(table.total() + table.truncation_mass == doctest::Approx(1.0));
  }

  SUBCASE("row sums approach the tier probabilities") {
    const auto cfg = fig1_config();
    const auto table = assoc_prob_table(cfg, model, 100);
    const auto sums = table.row_sums();
    CHECK(sums[0] == doctest::Approx(0.2612).epsilon(4e-3));
    CHECK(sums[1] == doctest::Approx(0.7388).epsilon(2e-3));
  }

  SUBCASE("entries are probabilities, decreasing in n") {
    const auto table = assoc_prob_table(fig1_config(), model, 30);
    for (const auto& row : table.entries) {
      for (std::size_t n = 0; n < row.size(); ++n) {
        CHECK(row[n] >= 0.0);
        CHECK(row[n] <= 1.0);
        if (n > 0) CHECK(row[n] <= row[n - 1]);
      }
    }
  }
}
