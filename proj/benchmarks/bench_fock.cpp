#include <benchmark/benchmark.h>

#include "bifree/bifree.hpp"

using namespace bifree;

static void BM_VacuumMoments(benchmark::State& state) {
  Rng rng(5);
  const auto model = convert<double>(random_commuting_model(rng, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(vacuum_moments(model, 6));
}
BENCHMARK(BM_VacuumMoments)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_GnsExtract(benchmark::State& state) {
  Rng rng(6);
  const auto k = convert<double>(lh_to_cumulants(random_lh_data(rng, static_cast<int>(state.range(0))), 8));
  for (auto _ : state) benchmark::DoNotOptimize(extract_levy_measures(gns_reconstruct(k, 3)));
}
BENCHMARK(BM_GnsExtract)->DenseRange(1, 4);

static void BM_CheckId(benchmark::State& state) {
  const auto k = convert<double>(bifree_poisson<Rational>(1, 2, -1, 8));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_cpsd(k, 3));
    benchmark::DoNotOptimize(check_cond_bounded(k, 3));
  }
}
BENCHMARK(BM_CheckId);

BENCHMARK_MAIN();
