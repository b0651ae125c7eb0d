// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "tripods/analytics.hpp"
#include "tripods/census.hpp"

using namespace tripods;

namespace {

CensusConfig config(const LatticeSpec& lattice, int radius, int threads) {
  CensusConfig c;
  c.lattice = lattice;
  c.radius = radius;
  c.threads = threads;
  return c;
}

void BM_CensusGaussian(benchmark::State& state) {
  const CensusConfig c = config(LatticeSpec::gaussian(), static_cast<int>(state.range(0)),
                                static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(census(c).counts.primitive);
}
BENCHMARK(BM_CensusGaussian)
    ->ArgsProduct({{10, 20, 35}, {1, 4}})
    ->ArgNames({"R", "threads"})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

void BM_CensusEisenstein(benchmark::State& state) {
  CensusConfig c = config(LatticeSpec::eisenstein(), static_cast<int>(state.range(0)),
                          static_cast<int>(state.range(1)));
  c.classify_reduced = true;
  for (auto _ : state) benchmark::DoNotOptimize(census(c).counts.primitive);
}
BENCHMARK(BM_CensusEisenstein)
    ->ArgsProduct({{10, 20}, {1, 4}})
    ->ArgNames({"R", "threads"})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

void BM_CensusReference(benchmark::State& state) {
  const CensusConfig c = config(LatticeSpec::gaussian(), static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(census_reference(c).counts.primitive);
}
BENCHMARK(BM_CensusReference)->Arg(5)->Arg(10)->ArgName("R")->Unit(benchmark::kMillisecond);

void BM_VolumeParallel(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mc_omega_volume(1000000, 1, threads).hits);
  state.SetItemsProcessed(state.iterations() * 1000000);
}
BENCHMARK(BM_VolumeParallel)
    ->Arg(1)
    ->Arg(4)
    ->ArgName("threads")
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

void BM_VolumeSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mc_omega_volume_serial(1000000, 1).hits);
  state.SetItemsProcessed(state.iterations() * 1000000);
}
BENCHMARK(BM_VolumeSerial)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
