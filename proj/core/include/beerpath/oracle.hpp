#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "beerpath/interval_core.hpp"
#include "beerpath/types.hpp"

// Brute-force ground truth for tests. Nothing here touches the distance tree.
namespace beerpath::oracle {

// Sorted neighbour lists from pairwise endpoint comparison. Index 0 unused.
struct AdjacencyList {
  std::vector<std::vector<Vertex>> adj;

  static AdjacencyList from_graph(const IntervalCore& g);
  static AdjacencyList from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t n() const { return adj.size() - 1; }
  bool adjacent(Vertex u, Vertex v) const;
};

// BFS distances from s (entry 0 unused).
std::vector<Distance> bfs(const AdjacencyList& g, Vertex s);
Distance dist(const AdjacencyList& g, Vertex u, Vertex v);

// All-pairs table, n BFS runs.
class DistanceTable {
 public:
  explicit DistanceTable(const AdjacencyList& g);
  std::size_t n() const { return rows_.size() - 1; }
  Distance operator()(Vertex u, Vertex v) const { return rows_[u][v]; }

 private:
  std::vector<std::vector<Distance>> rows_;
};

Distance beer_dist(const DistanceTable& d, const std::vector<Vertex>& beers, Vertex u, Vertex v);
Distance beer_dist(const AdjacencyList& g, const std::vector<Vertex>& beers, Vertex u, Vertex v);

// dist(u,w) + dist(w,v) - dist(u,v); requires w not in {u, v} and finite distances.
std::uint32_t classify(const DistanceTable& d, Vertex u, Vertex w, Vertex v);

// nullopt when valid, otherwise the first reason found.
std::optional<std::string> validate_path(const AdjacencyList& g, const std::vector<Vertex>& beers, const Path& path,
                                         Vertex u, Vertex v, std::uint32_t expected_length);

// Beer patterns up to automorphism, by Burnside over all n! permutations.
// Raises too_large for n > 8.
std::uint64_t orbit_count(const AdjacencyList& g);
std::uint64_t automorphism_count(const AdjacencyList& g);

// Maximal cliques left to right as closed vertex ranges (a proper interval
// graph has contiguous cliques).
std::vector<std::pair<Vertex, Vertex>> maximal_cliques(const IntervalCore& g);
// The clique ranges are unchanged under v -> n + 1 - v.
bool clique_symmetric(const IntervalCore& g);

}  // namespace beerpath::oracle
