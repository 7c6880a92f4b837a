#include "beerpath/interval.hpp"

#include <algorithm>

#include "beerpath/error.hpp"
#include "beerpath/proper_interval.hpp"

namespace beerpath {

IntervalGraph IntervalGraph::parse(std::string_view endpoints, Pairing pairing, bool flip) {
  return IntervalGraph(EndpointModel::parse(endpoints, pairing, flip));
}

IntervalGraph IntervalGraph::parse(std::string_view endpoints, std::span<const Vertex> right_owners, bool flip) {
  return IntervalGraph(EndpointModel::parse(endpoints, right_owners, flip));
}

bool IntervalGraph::is_proper() const {
  for (Vertex v = 2; v <= n(); ++v)
    if (model().right[v] < model().right[v - 1]) return false;
  return true;
}

ProperIntervalGraph IntervalGraph::to_proper() const { return ProperIntervalGraph::from_model(model()); }

// With u < v, let k be the depth where v_k <= u < v_{k+1} on v's root chain.
// Depth is monotone in vertex order, so depth(u) is k or k+1 and a single
// ancestor lookup at depth(u) identifies which.
Distance IntervalGraph::dist(Vertex u, Vertex v) const {
  check(u);
  check(v);
  if (u == v) return Distance(0);
  if (component_of(u) != component_of(v)) return Distance::infinite();
  if (u > v) std::swap(u, v);
  const std::uint32_t k1 = depth(u), k2 = depth(v);
  const Vertex a = ancestor(v, k1);
  if (a == u) return Distance(k2 - k1);
  if (a < u) return Distance(adjacent(u, ancestor(v, k1 + 1)) ? k2 - k1 : k2 - k1 + 1);
  return Distance(adjacent(u, a) ? k2 - k1 + 1 : k2 - k1 + 2);
}

Path IntervalGraph::shortest_path(Vertex u, Vertex v) const {
  check(u);
  check(v);
  if (u == v) return {u};
  if (component_of(u) != component_of(v)) return {};
  const bool swapped = u > v;
  if (swapped) std::swap(u, v);
  const std::uint32_t k1 = depth(u);
  const Vertex a = ancestor(v, k1);
  std::uint32_t from;  // depth of the first chain vertex after u
  if (a == u)
    from = k1;
  else if (a < u)
    from = adjacent(u, ancestor(v, k1 + 1)) ? k1 + 1 : k1;
  else
    from = adjacent(u, a) ? k1 : k1 - 1;
  Path path{u};
  for (Vertex w : chain(v, from))
    if (w != u) path.push_back(w);
  if (swapped) std::reverse(path.begin(), path.end());
  return path;
}

MirrorMap::MirrorMap(const IntervalCore& g, std::span<const Vertex> beers) {
  const std::size_t n = g.n();
  mirror_.assign(n + 1, 0);
  inverse_.assign(n + 1, 0);
  for (Vertex v = 1; v <= n; ++v) {
    const auto m = static_cast<std::uint32_t>(n - g.endpoint_bits().rank1(g.right(v) - 1));
    mirror_[v] = m;
    inverse_[m] = v;
  }
  std::vector<std::uint64_t> pos;
  for (Vertex b : beers) pos.push_back(mirror_.at(b));
  std::sort(pos.begin(), pos.end());
  beer_bits_ = BitVector(n, pos);
}

std::uint32_t MirrorMap::mirror(Vertex v) const {
  if (v < 1 || v >= mirror_.size()) raise(Errc::out_of_range, "vertex " + std::to_string(v));
  return mirror_[v];
}

Vertex MirrorMap::original(std::uint32_t m) const {
  if (m < 1 || m >= inverse_.size()) raise(Errc::out_of_range, "mirror rank " + std::to_string(m));
  return inverse_[m];
}

}  // namespace beerpath
