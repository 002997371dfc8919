#include <benchmark/benchmark.h>

#include <limits>

#include "hetnet/association.hpp"
#include "hetnet/fading.hpp"
#include "hetnet/simulator.hpp"
#include "hetnet/specfun.hpp"

namespace {

using namespace hetnet;

constexpr double kInf = std::numeric_limits<double>::infinity();

void BM_IncompleteGamma(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::lower_incomplete_gamma(1.5, x));
    x = x < 10.0 ? x + 0.1 : 0.1;
  }
}
BENCHMARK(BM_IncompleteGamma);

void BM_GPairClosedForm(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        association::g_pair_nakagami(1.0, 1.0, 4.0, 1.0, kInf));
  }
}
BENCHMARK(BM_GPairClosedForm);

void BM_GPairQuadrature(benchmark::State& state) {
  fading::NakagamiFading model(1.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        association::g_pair_general(model, 4.0, 1.0, kInf));
  }
}
BENCHMARK(BM_GPairQuadrature);

void BM_Trial(benchmark::State& state) {
  association::NetworkConfig cfg{{{1.0, 1.0}, {2.0, 2.0}}, 4.0};
  fading::NakagamiFading model(1.0, 1.0);
  std::uint64_t trial = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        simulator::run_trial(cfg, model, state.range(0), 1, trial++));
  }
}
BENCHMARK(BM_Trial)->Arg(100)->Arg(500);

void BM_AssocTable(benchmark::State& state) {
  association::NetworkConfig cfg{{{1.0, 1.0}, {2.0, 2.0}}, 4.0};
  fading::NakagamiFading model(1.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(association::assoc_prob_table(cfg, model, 50));
  }
}
BENCHMARK(BM_AssocTable);

}  // namespace

BENCHMARK_MAIN();
