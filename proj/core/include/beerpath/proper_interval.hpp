#pragma once

#include <string_view>
#include <vector>

#include "beerpath/interval_core.hpp"

namespace beerpath {

class IntervalGraph;

// Proper interval graph: right endpoints appear in the same order as left
// endpoints, so the i-th '0' and the i-th '1' both belong to vertex i.
class ProperIntervalGraph : public IntervalCore {
 public:
  ProperIntervalGraph() = default;

  // '0' = left endpoint; `flip` reads '1' as left instead.
  static ProperIntervalGraph parse(std::string_view endpoints, bool flip = false);
  // Fails with not-proper when some interval nests inside another.
  static ProperIntervalGraph from_model(EndpointModel model);

  IntervalGraph as_interval() const;

  // Neighbourhood is the vertex run [tree_parent(v), last(v)] minus v.
  std::size_t degree(Vertex v) const;
  std::vector<Vertex> neighbours(Vertex v) const;

  Distance dist(Vertex u, Vertex v) const;
  Path shortest_path(Vertex u, Vertex v) const;  // empty when unreachable

 private:
  explicit ProperIntervalGraph(EndpointModel model) : IntervalCore(std::move(model)) {}
};

}  // namespace beerpath
