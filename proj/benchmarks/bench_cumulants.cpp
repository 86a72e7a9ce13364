#include <benchmark/benchmark.h>

#include "bifree/bifree.hpp"

using namespace bifree;

static void BM_MomentsToCumulantsRational(benchmark::State& state) {
  Rng rng(1);
  const auto m = random_moment_table(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(moments_to_cumulants(m));
}
BENCHMARK(BM_MomentsToCumulantsRational)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_MomentsToCumulantsFloat(benchmark::State& state) {
  Rng rng(2);
  const auto m = convert<double>(random_moment_table(rng, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(moments_to_cumulants(m));
}
BENCHMARK(BM_MomentsToCumulantsFloat)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_Convolve(benchmark::State& state) {
  Rng rng(3);
  const int degree = static_cast<int>(state.range(0));
  const auto a = random_cumulant_table(rng, degree);
  const auto b = random_cumulant_table(rng, degree);
  for (auto _ : state) benchmark::DoNotOptimize(cumulants_to_moments(bifree_convolve(a, b)));
}
BENCHMARK(BM_Convolve)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_VoiculescuIdentity(benchmark::State& state) {
  Rng rng(4);
  const auto m = moment_table(random_planar_measure(rng, 3), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_voiculescu_identity(m));
}
BENCHMARK(BM_VoiculescuIdentity)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
