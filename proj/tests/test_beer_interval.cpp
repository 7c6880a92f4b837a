#include <doctest.h>

#include "beerpath/beer_interval.hpp"
#include "beerpath/enumeration.hpp"
#include "beerpath/oracle.hpp"
#include "support.hpp"

using namespace beerpath;

TEST_CASE("classification") {
  auto star = test::star();
  CHECK(classify_interval(star, 2, 3, 4) == 2);
  auto g = IntervalGraph::parse(test::kG15);
  CHECK(classify_interval(g, 3, 8, 13) == 0);
  CHECK(classify_interval(g, 3, 6, 13) == 1);
  auto k3 = IntervalGraph::parse("000111");
  CHECK(classify_interval(k3, 1, 2, 3) == 1);
  CHECK_THROWS_AS(classify_interval(star, 3, 2, 4), Error);
}

// Smallest triples where the strict comparisons mislead; kept as regressions.
TEST_CASE("criteria fixtures") {
  SUBCASE("w = last(u) and last(w) = v on the path P3") {
    auto g = IntervalGraph::parse("001011");
    REQUIRE(criteria_in_scope(g, 1, 2, 3));
    CHECK(classify_interval(g, 1, 2, 3) == 0);
    auto lit = interval_criteria(g, 1, 2, 3, CriteriaReading::literal);
    CHECK_FALSE(lit.criterion1);
    CHECK_FALSE(lit.criterion2);
    CHECK(lit.predicted == 2);
    auto inc = interval_criteria(g, 1, 2, 3);
    CHECK(inc.criterion1);
    CHECK(inc.criterion2);
    CHECK(inc.predicted == 0);
  }
  SUBCASE("last(w) < w under nesting") {
    const std::vector<Vertex> owners{1, 3, 2, 4};
    auto g = IntervalGraph::parse("00011011", owners);
    REQUIRE(criteria_in_scope(g, 1, 3, 4));
    CHECK(g.last(3) == 2);
    CHECK(classify_interval(g, 1, 3, 4) == 1);
    CHECK(interval_criteria(g, 1, 3, 4, CriteriaReading::literal).predicted == 1);
    auto inc = interval_criteria(g, 1, 3, 4);
    CHECK(inc.criterion1);
    CHECK_FALSE(inc.criterion2);
    CHECK(inc.predicted == 1);
  }
  SUBCASE("adjacent ends are out of scope") {
    auto k3 = IntervalGraph::parse("000111");
    CHECK_FALSE(criteria_in_scope(k3, 1, 2, 3));
    CHECK(interval_criteria(k3, 1, 2, 3, CriteriaReading::literal).predicted == 2);
  }
}

TEST_CASE("criteria over every interval graph with n <= 6") {
  std::size_t in_scope = 0, literal_misses = 0;
  for (unsigned n = 3; n <= 6; ++n)
    for_each_dyck(n, true, [&](const std::string& s) {
      test::for_each_pairing(s, [&](const std::vector<Vertex>& owners) {
        auto g = IntervalGraph::parse(s, owners);
        for (Vertex u = 1; u <= n; ++u)
          for (Vertex w = u + 1; w <= n; ++w)
            for (Vertex v = w + 1; v <= n; ++v) {
              const int k = classify_interval(g, u, w, v);
              REQUIRE(k >= 0);
              REQUIRE(k <= 2);
              if (!criteria_in_scope(g, u, w, v)) continue;
              ++in_scope;
              REQUIRE_MESSAGE(interval_criteria(g, u, w, v).predicted == k, s << " (" << u << "," << w << "," << v << ")");
              literal_misses += interval_criteria(g, u, w, v, CriteriaReading::literal).predicted != k;
            }
      });
    });
  CHECK(in_scope == 43788);
  CHECK(literal_misses == 29270);
}

TEST_CASE("candidates on the star") {
  auto g = test::star();
  {
    IntervalBeerIndex idx(g, BeerSet(4, {2}));
    auto c = idx.outer_candidates(3, 4);
    REQUIRE(c.before);
    CHECK(c.before->vertex == 2);
    CHECK(c.before->length == 4);
  }
  {
    IntervalBeerIndex idx(g, BeerSet(4, {4}));
    auto c = idx.outer_candidates(2, 3);
    REQUIRE(c.after);
    CHECK(c.after->vertex == 4);
    CHECK(c.after->length == 4);
  }
  {
    IntervalBeerIndex idx(g, BeerSet(4, {3}));
    auto m = idx.candidate3(2, 4);
    REQUIRE(m);
    CHECK(m->extra == 2);
    CHECK(m->length == 4);
    CHECK(idx.beer_dist(2, 4) == 4);
    CHECK(idx.beer_path(2, 4) == Path{2, 1, 3, 1, 4});
  }
  {
    IntervalBeerIndex idx(g, BeerSet(4, {1}));
    auto m = idx.candidate4(2, 4);
    REQUIRE(m);
    CHECK(m->extra == 0);
    CHECK(m->length == 2);
    CHECK(idx.beer_dist(2, 4) == 2);
    CHECK(idx.beer_path(2, 4) == Path{2, 1, 4});
    CHECK_FALSE(idx.candidate3(2, 4));
  }
  {
    IntervalBeerIndex idx(g, BeerSet(4, {}));
    auto c = idx.outer_candidates(2, 3);
    CHECK_FALSE(c.after);
    CHECK_FALSE(c.before);
    CHECK_FALSE(idx.candidate3(2, 4));
    CHECK_FALSE(idx.candidate4(2, 4));
    CHECK_THROWS_AS(idx.beer_dist(2, 4), Error);
  }
  IntervalBeerIndex endpoint(g, BeerSet(4, {2}));
  CHECK(endpoint.beer_dist(2, 4) == 2);
}

TEST_CASE("G15 as an interval graph") {
  auto g = IntervalGraph::parse(test::kG15);
  IntervalBeerIndex eight(g, BeerSet(15, {8}));
  auto m = eight.candidate3(3, 13);
  REQUIRE(m);
  CHECK(m->extra == 0);
  CHECK(m->length == 2);
  CHECK(eight.beer_path(13, 3) == Path{13, 8, 3});
  IntervalBeerIndex six(g, BeerSet(15, {6}));
  CHECK(six.beer_dist(13, 3) == 3);

  std::vector<Vertex> all(15);
  for (Vertex v = 1; v <= 15; ++v) all[v - 1] = v;
  IntervalBeerIndex every(g, BeerSet(15, all));
  for (Vertex u = 1; u <= 15; ++u)
    for (Vertex v = u; v <= 15; ++v) CHECK_FALSE(every.candidate4(u, v));
}

TEST_CASE("every interval graph with n <= 5, every beer set, every pair") {
  for (unsigned n = 1; n <= 5; ++n)
    for_each_dyck(n, true, [&](const std::string& s) {
      test::for_each_pairing(s, [&](const std::vector<Vertex>& owners) {
        auto g = IntervalGraph::parse(s, owners);
        const auto adj = oracle::AdjacencyList::from_graph(g);
        const oracle::DistanceTable d(adj);
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
          const auto b = test::subset(mask);
          IntervalBeerIndex idx(g, BeerSet(n, b));
          for (Vertex u = 1; u <= n; ++u)
            for (Vertex v = 1; v <= n; ++v) {
              const auto want = oracle::beer_dist(d, b, u, v).value();
              REQUIRE(idx.beer_dist(u, v) == want);
              REQUIRE_FALSE(oracle::validate_path(adj, b, idx.beer_path(u, v), u, v, want));
            }
        }
      });
    });
}

TEST_CASE("random interval graphs against the oracle") {
  Rng rng(404);
  for (int i = 0; i < 1000; ++i) {
    const auto n = rng.between(1, 200);
    auto g = test::random_interval_graph(rng, n);
    const auto adj = oracle::AdjacencyList::from_graph(g);
    const auto b = test::random_nonempty_beers(rng, n);
    IntervalBeerIndex idx(g, BeerSet(n, b));
    for (int q = 0; q < 10; ++q) {
      const auto u = static_cast<Vertex>(rng.between(1, n)), v = static_cast<Vertex>(rng.between(1, n));
      const auto want = oracle::beer_dist(adj, b, u, v).value();
      REQUIRE(idx.beer_dist(u, v) == want);
      REQUIRE_FALSE(oracle::validate_path(adj, b, idx.beer_path(u, v), u, v, want));
    }
  }
}
