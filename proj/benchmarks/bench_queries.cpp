#include <benchmark/benchmark.h>

#include "beerpath/beer_interval.hpp"
#include "beerpath/beer_proper.hpp"
#include "beerpath/random.hpp"

using namespace beerpath;

namespace {

struct ProperFixture {
  ProperIntervalGraph g;
  BeerSet beers;

  explicit ProperFixture(std::size_t n) {
    Rng rng(n);
    g = ProperIntervalGraph::parse(random_connected_dyck(rng, n));
    auto b = random_beers(rng, n, 0.05);
    if (b.empty()) b.push_back(1);
    beers = BeerSet(n, b);
  }
};

void BM_ProperDist(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ProperFixture f(n);
  Rng rng(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(f.g.dist(static_cast<Vertex>(rng.between(1, n)), static_cast<Vertex>(rng.between(1, n))));
}
BENCHMARK(BM_ProperDist)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

void BM_ProperBeerDist(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ProperFixture f(n);
  const ProperBeerIndex idx(f.g, f.beers);
  Rng rng(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(idx.beer_dist(static_cast<Vertex>(rng.between(1, n)), static_cast<Vertex>(rng.between(1, n))));
  state.counters["index_bits_per_vertex"] = static_cast<double>(idx.size_in_bits()) / n;
}
BENCHMARK(BM_ProperBeerDist)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

void BM_CompactBeerDist(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto delta = static_cast<std::uint32_t>(state.range(1));
  const ProperFixture f(n);
  const CompactBeerIndex idx(f.g, f.beers, delta);
  Rng rng(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(idx.beer_dist(static_cast<Vertex>(rng.between(1, n)), static_cast<Vertex>(rng.between(1, n))));
  state.counters["selected"] = static_cast<double>(idx.selected_count());
  state.counters["index_bits_per_vertex"] = static_cast<double>(idx.size_in_bits()) / n;
}
BENCHMARK(BM_CompactBeerDist)->ArgsProduct({{1 << 10, 1 << 13, 1 << 16}, {2, 4, 8, 16}});

void BM_ProperBeerPath(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ProperFixture f(n);
  const ProperBeerIndex idx(f.g, f.beers);
  Rng rng(4);
  for (auto _ : state)
    benchmark::DoNotOptimize(idx.beer_path(static_cast<Vertex>(rng.between(1, n)), static_cast<Vertex>(rng.between(1, n))));
}
BENCHMARK(BM_ProperBeerPath)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

void BM_IntervalBeerDist(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(n);
  const auto g = IntervalGraph::from_model(random_pairing(rng, random_connected_dyck(rng, n)));
  auto b = random_beers(rng, n, 0.05);
  if (b.empty()) b.push_back(1);
  const IntervalBeerIndex idx(g, BeerSet(n, b));
  for (auto _ : state)
    benchmark::DoNotOptimize(idx.beer_dist(static_cast<Vertex>(rng.between(1, n)), static_cast<Vertex>(rng.between(1, n))));
  state.counters["index_bits_per_vertex"] = static_cast<double>(idx.size_in_bits()) / n;
}
BENCHMARK(BM_IntervalBeerDist)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

void BM_BuildCompact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ProperFixture f(n);
  for (auto _ : state) {
    CompactBeerIndex idx(f.g, f.beers, 8);
    benchmark::DoNotOptimize(idx.selected_count());
  }
}
BENCHMARK(BM_BuildCompact)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond);

}  // namespace
