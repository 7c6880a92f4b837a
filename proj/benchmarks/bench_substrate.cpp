#include <benchmark/benchmark.h>

#include "beerpath/bit_vector.hpp"
#include "beerpath/ordinal_tree.hpp"
#include "beerpath/random.hpp"
#include "beerpath/range_index.hpp"

using namespace beerpath;

namespace {

std::vector<bool> random_bits(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<bool> b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = rng.chance(p);
  return b;
}

template <BitVectorMode Mode>
void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BitVector bv(random_bits(n, 0.1, 1), Mode);
  Rng rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(bv.rank1(rng.below(n + 1)));
  state.counters["bits_per_bit"] = static_cast<double>(bv.size_in_bits()) / n;
}
BENCHMARK(BM_Rank<BitVectorMode::plain>)->Range(1 << 12, 1 << 22);
BENCHMARK(BM_Rank<BitVectorMode::compressed>)->Range(1 << 12, 1 << 22);

template <BitVectorMode Mode>
void BM_Select(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BitVector bv(random_bits(n, 0.1, 1), Mode);
  Rng rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(bv.select1(rng.between(1, bv.ones())));
}
BENCHMARK(BM_Select<BitVectorMode::plain>)->Range(1 << 12, 1 << 22);
BENCHMARK(BM_Select<BitVectorMode::compressed>)->Range(1 << 12, 1 << 22);

void BM_LevelAncestor(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  Rng rng(4);
  std::vector<OrdinalTree::Node> parents{0};
  for (OrdinalTree::Node v = 2; v <= n; ++v) {
    const OrdinalTree::Node lo = std::max<OrdinalTree::Node>(1, parents.back());
    parents.push_back(static_cast<OrdinalTree::Node>(rng.between(lo, std::min<OrdinalTree::Node>(v - 1, lo + 2))));
  }
  const auto t = OrdinalTree::from_parents(parents);
  for (auto _ : state) {
    const auto v = static_cast<OrdinalTree::Node>(rng.between(1, n));
    benchmark::DoNotOptimize(t.ancestor(v, static_cast<std::uint32_t>(rng.below(t.depth(v) + 1))));
  }
  state.counters["height"] = t.height();
}
BENCHMARK(BM_LevelAncestor)->Range(1 << 10, 1 << 20);

void BM_Grid2DEmpty(benchmark::State& state) {
  const auto n = static_cast<Coord>(state.range(0));
  Rng rng(5);
  std::vector<Point2> pts;
  for (Coord i = 0; i < n; ++i) pts.push_back({static_cast<Coord>(rng.between(1, n)), static_cast<Coord>(rng.between(1, n))});
  const Grid2D g(pts);
  for (auto _ : state) {
    const auto a = static_cast<Coord>(rng.between(1, n)), b = static_cast<Coord>(rng.between(1, n));
    benchmark::DoNotOptimize(g.empty({Span1D::closed(std::min(a, b), std::max(a, b)), Span1D::below(a)}));
  }
}
BENCHMARK(BM_Grid2DEmpty)->Range(1 << 10, 1 << 18);

void BM_Grid3DEmpty(benchmark::State& state) {
  const auto n = static_cast<Coord>(state.range(0));
  Rng rng(6);
  std::vector<Point3> pts;
  for (Coord i = 0; i < n; ++i)
    pts.push_back({static_cast<Coord>(rng.between(1, n)), static_cast<Coord>(rng.between(1, n)),
                   static_cast<Coord>(rng.between(1, n))});
  const Grid3D g(pts);
  for (auto _ : state) {
    const auto a = static_cast<Coord>(rng.between(1, n)), b = static_cast<Coord>(rng.between(1, n));
    benchmark::DoNotOptimize(
        g.empty({Span1D::open(std::min(a, b), std::max(a, b)), Span1D::above(b), Span1D::below(a)}));
  }
}
BENCHMARK(BM_Grid3DEmpty)->Range(1 << 10, 1 << 18);

}  // namespace
