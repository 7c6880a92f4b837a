#include <doctest.h>

#include "beerpath/enumeration.hpp"
#include "beerpath/oracle.hpp"
#include "support.hpp"

using namespace beerpath;
using namespace beerpath::oracle;

TEST_CASE("distances") {
  auto star = AdjacencyList::from_graph(test::star());
  CHECK(dist(star, 2, 4) == Distance(2));
  CHECK(dist(star, 3, 3) == Distance(0));
  auto apart = AdjacencyList::from_graph(ProperIntervalGraph::parse("0101"));
  CHECK(dist(apart, 1, 2).is_infinite());
  CHECK(beer_dist(apart, {2}, 1, 1).is_infinite());
  CHECK(beer_dist(star, {}, 1, 2).is_infinite());
}

TEST_CASE("beer distances and classification") {
  auto g15 = AdjacencyList::from_graph(test::g15());
  DistanceTable d(g15);
  CHECK(beer_dist(d, {6}, 13, 3) == Distance(3));
  CHECK(beer_dist(g15, {6}, 13, 3) == Distance(3));
  CHECK(beer_dist(d, {13}, 13, 3) == d(13, 3));
  CHECK(classify(d, 3, 6, 13) == 1);
  CHECK(classify(d, 3, 8, 13) == 0);
  CHECK(classify(d, 2, 3, 4) == 1);

  auto star = AdjacencyList::from_graph(test::star());
  CHECK(beer_dist(star, {3}, 2, 4) == Distance(4));
}

TEST_CASE("path validation") {
  auto g = AdjacencyList::from_graph(test::g15());
  CHECK_FALSE(validate_path(g, {6}, {13, 7, 6, 3}, 13, 3, 3));
  CHECK_FALSE(validate_path(g, {8}, {13, 8, 3}, 13, 3, 2));
  CHECK(validate_path(g, {6}, {13, 7, 3}, 13, 3, 2) == "no beer vertex");
  CHECK(validate_path(g, {6}, {13, 6, 3}, 13, 3, 2) == "no edge 13-6");
  CHECK(validate_path(g, {7}, {13, 7, 3}, 13, 3, 3) == "length 2, expected 3");
  CHECK(validate_path(g, {7}, {7, 3}, 13, 3, 1).has_value());
  CHECK(validate_path(g, {7}, {}, 13, 3, 1) == "empty path");
  auto star = AdjacencyList::from_graph(test::star());
  CHECK_FALSE(validate_path(star, {3}, {2, 1, 3, 1, 4}, 2, 4, 4));
}

TEST_CASE("orbit counts") {
  auto k3 = AdjacencyList::from_graph(ProperIntervalGraph::parse("000111"));
  CHECK(orbit_count(k3) == 4);
  CHECK(automorphism_count(k3) == 6);
  auto p3 = AdjacencyList::from_graph(ProperIntervalGraph::parse("001011"));
  CHECK(orbit_count(p3) == 6);
  auto k1 = AdjacencyList::from_graph(ProperIntervalGraph::parse("01"));
  CHECK(orbit_count(k1) == 2);
  for (unsigned n = 1; n <= 8; ++n) {
    auto kn = AdjacencyList::from_graph(ProperIntervalGraph::parse(std::string(n, '0') + std::string(n, '1')));
    CHECK(orbit_count(kn) == n + 1);
  }
  auto k9 = AdjacencyList::from_graph(ProperIntervalGraph::parse(std::string(9, '0') + std::string(9, '1')));
  CHECK_THROWS_AS(orbit_count(k9), Error);
  auto edges = AdjacencyList::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 1}, {2, 1}});
  CHECK(automorphism_count(edges) == 8);
  CHECK(orbit_count(edges) == 6);
}

TEST_CASE("maximal cliques and reflection symmetry") {
  auto g15 = test::g15();
  auto cliques = maximal_cliques(g15);
  CHECK(cliques.front() == std::pair<Vertex, Vertex>{1, 5});
  CHECK(cliques.back().second == 15);
  CHECK(clique_symmetric(ProperIntervalGraph::parse("001011")));
  CHECK(clique_symmetric(ProperIntervalGraph::parse("000111")));
  CHECK(clique_symmetric(ProperIntervalGraph::parse("00010111")));
  CHECK_FALSE(clique_symmetric(ProperIntervalGraph::parse("00011011")));
  CHECK_FALSE(clique_symmetric(g15));
}

TEST_CASE("beer distance laws") {
  Rng rng(6);
  for (int i = 0; i < 100; ++i) {
    const auto n = rng.between(1, 40);
    auto g = test::random_interval_graph(rng, n, false);
    auto adj = AdjacencyList::from_graph(g);
    for (Vertex v = 1; v <= n; ++v)
      for (Vertex w : adj.adj[v]) REQUIRE(adj.adjacent(w, v));
    DistanceTable d(adj);
    const auto b = random_beers(rng, n, 0.3);
    std::vector<Vertex> all;
    for (Vertex v = 1; v <= n; ++v) all.push_back(v);
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex v = 1; v <= n; ++v) {
        REQUIRE(beer_dist(d, b, u, v) == beer_dist(d, b, v, u));
        REQUIRE(beer_dist(d, b, u, v) >= d(u, v));
        REQUIRE(beer_dist(d, all, u, v) == d(u, v));
      }
  }
}
