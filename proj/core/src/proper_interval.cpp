#include "beerpath/proper_interval.hpp"

#include <algorithm>

#include "beerpath/error.hpp"
#include "beerpath/interval.hpp"

namespace beerpath {

ProperIntervalGraph ProperIntervalGraph::parse(std::string_view endpoints, bool flip) {
  return ProperIntervalGraph(EndpointModel::parse(endpoints, Pairing::fifo, flip));
}

ProperIntervalGraph ProperIntervalGraph::from_model(EndpointModel model) {
  for (Vertex v = 2; v <= model.n(); ++v)
    if (model.right[v] < model.right[v - 1])
      raise(Errc::not_proper, "interval of vertex " + std::to_string(v) + " nests inside vertex " +
                                  std::to_string(v - 1));
  return ProperIntervalGraph(std::move(model));
}

IntervalGraph ProperIntervalGraph::as_interval() const { return IntervalGraph::from_model(model()); }

std::size_t ProperIntervalGraph::degree(Vertex v) const {
  const Vertex p = tree_parent(v);
  return std::max(v, last(v)) - (p == kNoVertex ? v : p);
}

std::vector<Vertex> ProperIntervalGraph::neighbours(Vertex v) const {
  const Vertex p = tree_parent(v);
  std::vector<Vertex> out;
  for (Vertex u = p == kNoVertex ? v : p; u <= std::max(v, last(v)); ++u)
    if (u != v) out.push_back(u);
  return out;
}

Distance ProperIntervalGraph::dist(Vertex u, Vertex v) const {
  check(u);
  check(v);
  if (u == v) return Distance(0);
  if (component_of(u) != component_of(v)) return Distance::infinite();
  if (u > v) std::swap(u, v);
  const std::uint32_t k1 = depth(u), k2 = depth(v);
  const Vertex a = ancestor(v, k1);
  return Distance(a <= u ? k2 - k1 : k2 - k1 + 1);
}

Path ProperIntervalGraph::shortest_path(Vertex u, Vertex v) const {
  check(u);
  check(v);
  if (u == v) return {u};
  if (component_of(u) != component_of(v)) return {};
  const bool swapped = u > v;
  if (swapped) std::swap(u, v);
  const std::uint32_t k1 = depth(u);
  Path path;
  path.push_back(u);
  // a = v_{k1}; if a < u, u reaches v_{k1+1} directly, if a > u, u reaches a
  const Vertex a = ancestor(v, k1);
  const auto rest = chain(v, a < u ? k1 + 1 : k1);
  for (Vertex w : rest)
    if (w != u) path.push_back(w);
  if (swapped) std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace beerpath
