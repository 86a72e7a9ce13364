#include <benchmark/benchmark.h>

#include "bifree/bifree.hpp"

using namespace bifree;

static void BM_EnumerateNC(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_nc(n));
}
BENCHMARK(BM_EnumerateNC)->DenseRange(6, 12, 2);

static void BM_EnumerateBNC(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::string labels;
  for (int i = 0; i < n; ++i) labels += i % 2 == 0 ? 'L' : 'R';
  const auto chi = ChiMap::parse(labels);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_bnc(chi));
}
BENCHMARK(BM_EnumerateBNC)->DenseRange(6, 10, 2);

static void BM_MobiusNC(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto& lattice = nc_lattice(n);
  const auto top = Partition::one(n);
  for (auto _ : state)
    for (const auto& p : lattice) benchmark::DoNotOptimize(mobius_nc(p, top));
}
BENCHMARK(BM_MobiusNC)->DenseRange(4, 8, 2);

BENCHMARK_MAIN();
