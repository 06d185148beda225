#include <benchmark/benchmark.h>

#include "mtc/gates.hpp"
#include "mtc/measurement.hpp"
#include "mtc/oracle.hpp"
#include "mtc/protocol.hpp"

using namespace mtc;

static void BM_HadamardButterfly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto sv = build_statevector(TwoComponentState(BasisString(n, 0), 0.5, 1.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_hadamard_all(sv));
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n) * n);
}
BENCHMARK(BM_HadamardButterfly)->Arg(10)->Arg(16)->Arg(20);

static void BM_ParitySampling(benchmark::State& state) {
  const TwoComponentState s(BasisString(8, 0), 0.3, 1.0);
  const auto d = analytic_post_hadamard(s);
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_shots(d, 1000000, 42, workers));
  }
  state.SetItemsProcessed(state.iterations() * 1000000);
}
BENCHMARK(BM_ParitySampling)->Arg(1)->Arg(4)->Arg(8);

static void BM_DenseSampling(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto sv = apply_hadamard_all(
      build_statevector(TwoComponentState(BasisString(n, 0), 0.3, 1.0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_shots(sv, 100000, 42));
  }
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_DenseSampling)->Arg(8)->Arg(16);

static void BM_DensityEvolution(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto rho = oracle::densify_mixture(ClassicalTwoMixture(BasisString(n, 0), 0.3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::evolve_density(rho, oracle::HadamardAll{}));
  }
}
BENCHMARK(BM_DensityEvolution)->Arg(6)->Arg(8)->Arg(10);

static void BM_PhaseExtraction(benchmark::State& state) {
  const TwoComponentState s(BasisString(6, 0), 0.5, 2.4);
  ProtocolOptions opts;
  opts.shots_per_run = static_cast<std::int64_t>(state.range(0));
  opts.seed = 7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_phase_extraction(s, opts));
  }
}
BENCHMARK(BM_PhaseExtraction)->Arg(10000)->Arg(100000);

BENCHMARK_MAIN();
