#include <benchmark/benchmark.h>

#include "beerpath/enumeration.hpp"

using namespace beerpath;

namespace {

void BM_WeightedSeriesRecurrence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(weighted_series(static_cast<unsigned>(state.range(0))).cbar.back());
}
BENCHMARK(BM_WeightedSeriesRecurrence)->Arg(100)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_WeightedSeriesGf(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(weighted_series_gf(static_cast<unsigned>(state.range(0))).back());
}
BENCHMARK(BM_WeightedSeriesGf)->Arg(100)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_WeightedSeriesDirect(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(weighted_series_direct(static_cast<unsigned>(state.range(0))).back());
}
BENCHMARK(BM_WeightedSeriesDirect)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

void BM_HEnumerated(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(h_enumerated(static_cast<unsigned>(state.range(0))).back());
}
BENCHMARK(BM_HEnumerated)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
