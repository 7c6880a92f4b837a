#include <doctest.h>

#include <algorithm>

#include "beerpath/beer_proper.hpp"
#include "beerpath/enumeration.hpp"
#include "beerpath/oracle.hpp"
#include "support.hpp"

using namespace beerpath;

namespace {

BeerSet beers(const ProperIntervalGraph& g, std::vector<Vertex> b) { return BeerSet(g.n(), std::move(b)); }

}  // namespace

TEST_CASE("classification on G15") {
  auto g = test::g15();
  CHECK(classify_proper(g, 3, 8, 13) == 0);
  CHECK(classify_proper(g, 3, 6, 13) == 1);
  CHECK(classify_proper(g, 2, 3, 4) == 1);  // 2 ~ 4: nothing strictly between can preserve
  CHECK_THROWS_AS(classify_proper(g, 3, 13, 8), Error);
}

TEST_CASE("candidates on G15") {
  auto g = test::g15();
  {
    ProperBeerIndex idx(g, beers(g, {14}));
    auto c = idx.outer_candidates(3, 13);
    REQUIRE(c.after);
    CHECK(c.after->vertex == 14);
    CHECK(c.after->length == 3);
    CHECK_FALSE(c.before);
  }
  {
    ProperBeerIndex idx(g, beers(g, {2}));
    auto c = idx.outer_candidates(3, 13);
    REQUIRE(c.before);
    CHECK(c.before->vertex == 2);
    CHECK(c.before->length == 3);
    CHECK_FALSE(c.after);
  }
  {
    ProperBeerIndex idx(g, beers(g, {8}));
    auto m = idx.middle_candidate(3, 13);
    REQUIRE(m);
    CHECK(m->extra == 0);
    CHECK(m->length == 2);
  }
  {
    ProperBeerIndex idx(g, beers(g, {6}));
    auto m = idx.middle_candidate(3, 13);
    REQUIRE(m);
    CHECK(m->extra == 1);
    CHECK(m->length == 3);
  }
  {
    ProperBeerIndex idx(g, beers(g, {}));
    auto c = idx.outer_candidates(3, 13);
    CHECK_FALSE(c.after);
    CHECK_FALSE(c.before);
    CHECK_FALSE(idx.middle_candidate(3, 13));
    CHECK_THROWS_AS(idx.beer_dist(3, 13), Error);
    CHECK_THROWS_AS(idx.beer_path(3, 13), Error);
  }
}

TEST_CASE("beer distance and path on G15") {
  auto g = test::g15();
  ProperBeerIndex six(g, beers(g, {6}));
  CHECK(six.beer_dist(13, 3) == 3);
  CHECK(six.beer_path(13, 3) == Path{13, 7, 6, 3});
  ProperBeerIndex both(g, beers(g, {6, 8}));
  CHECK(both.beer_dist(13, 3) == 2);
  CHECK(both.beer_path(13, 3) == Path{13, 8, 3});
  ProperBeerIndex eight(g, beers(g, {8}));
  CHECK(eight.beer_path(13, 3) == Path{13, 8, 3});
  ProperBeerIndex end(g, beers(g, {13}));
  CHECK(end.beer_dist(13, 3) == 2);
  CHECK(end.beer_dist(5, 5) == 4);  // out to 13 and back
  CHECK(end.beer_path(5, 5).size() == 5);
  ProperBeerIndex self(g, beers(g, {9}));
  CHECK(self.beer_path(9, 9) == Path{9});
}

TEST_CASE("compact index on G15") {
  auto g = test::g15();
  CompactBeerIndex c(g, beers(g, {6}), 2);
  CHECK(c.selected_levels() == std::vector<std::uint32_t>{0, 2});
  CHECK(c.selected_count() == 7);
  CHECK(c.beer_dist(13, 3) == 3);
  CompactBeerIndex c2(g, beers(g, {6, 8}), 2);
  CHECK(c2.beer_dist(13, 3) == 2);
  CHECK(c2.beer_path(13, 3) == Path{13, 8, 3});
  CompactBeerIndex s(g, beers(g, {3}), 2);
  CHECK(s.beer_dist(3, 13) == 2);

  CompactBeerIndex tall(g, beers(g, {6}), 10);
  CHECK(tall.selected_levels().size() == 1);
  CHECK(tall.beer_dist(13, 3) == 3);

  CompactBeerIndex none(g, beers(g, {}), 2);
  for (Vertex v = 1; v <= 15; ++v) CHECK_FALSE(none.marked(v));

  try {
    CompactBeerIndex bad(g, beers(g, {1}), 1);
    FAIL("Delta 1 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::bad_parameter);
  }
}

TEST_CASE("disconnected graphs are rejected") {
  auto g = ProperIntervalGraph::parse("0101");
  try {
    ProperBeerIndex idx(g, BeerSet(2, {1}));
    FAIL("disconnected graph accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::disconnected);
  }
}

TEST_CASE("standard deltas") {
  CHECK(standard_deltas(1) == std::vector<std::uint32_t>{2});
  CHECK(standard_deltas(16) == std::vector<std::uint32_t>{2, 4, 8});
  CHECK(standard_deltas(200) == std::vector<std::uint32_t>{2, 8, 23});
}

TEST_CASE("every connected graph with n <= 7, every beer set, every pair") {
  for (unsigned n = 1; n <= 7; ++n)
    for_each_dyck(n, true, [&](const std::string& s) {
      auto g = ProperIntervalGraph::parse(s);
      const auto adj = oracle::AdjacencyList::from_graph(g);
      const oracle::DistanceTable d(adj);
      for (Vertex u = 1; u <= n; ++u)
        for (Vertex w = u + 1; w <= n; ++w)
          for (Vertex v = w + 1; v <= n; ++v) REQUIRE(classify_proper(g, u, w, v) == int(oracle::classify(d, u, w, v)));
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const auto b = test::subset(mask);
        ProperBeerIndex basic(g, BeerSet(n, b));
        ProperBeerIndex ranges(g, BeerSet(n, b), {.scan_threshold = 0});
        CompactBeerIndex c2(g, BeerSet(n, b), 2, {.explicit_post_bits = (mask & 1) != 0});
        CompactBeerIndex c3(g, BeerSet(n, b), 3, {.scan_threshold = 0});
        for (Vertex u = 1; u <= n; ++u)
          for (Vertex v = 1; v <= n; ++v) {
            const auto want = oracle::beer_dist(d, b, u, v).value();
            REQUIRE(basic.beer_dist(u, v) == want);
            REQUIRE(ranges.beer_dist(u, v) == want);
            REQUIRE(c2.beer_dist(u, v) == want);
            REQUIRE(c3.beer_dist(u, v) == want);
            const auto why = oracle::validate_path(adj, b, basic.beer_path(u, v), u, v, want);
            REQUIRE_MESSAGE(!why, s << " B mask " << mask << " (" << u << "," << v << "): " << *why);
          }
      }
    });
}

TEST_CASE("scan and range middle candidates agree") {
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const auto n = rng.between(2, 120);
    auto g = ProperIntervalGraph::parse(random_connected_dyck(rng, n));
    ProperBeerIndex idx(g, BeerSet(n, test::random_nonempty_beers(rng, n)));
    for (int q = 0; q < 100; ++q) {
      auto u = static_cast<Vertex>(rng.between(1, n)), v = static_cast<Vertex>(rng.between(1, n));
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      if (idx.beers().contains(u) || idx.beers().contains(v)) continue;
      auto a = idx.middle_by_scan(u, v), b = idx.middle_by_ranges(u, v);
      REQUIRE(a.has_value() == b.has_value());
      if (a) {
        REQUIRE(a->extra == b->extra);
        REQUIRE(a->length == b->length);
      }
    }
  }
}

TEST_CASE("random graphs: basic and compact against the oracle") {
  Rng rng(77);
  for (int i = 0; i < 150; ++i) {
    const auto n = rng.between(1, 200);
    auto g = ProperIntervalGraph::parse(random_connected_dyck(rng, n));
    const auto adj = oracle::AdjacencyList::from_graph(g);
    const auto b = test::random_nonempty_beers(rng, n);
    ProperBeerIndex basic(g, BeerSet(n, b));
    std::vector<CompactBeerIndex> compact;
    for (auto delta : standard_deltas(n)) compact.emplace_back(g, BeerSet(n, b), delta, CompactOptions{.explicit_post_bits = i % 2 == 0});
    for (auto& c : compact) {
      REQUIRE(c.selected_count() <= (n + c.delta() - 1) / c.delta() + 1);
      if (c.delta() >= 2) REQUIRE(c.selected_count() >= 1);
    }
    for (int q = 0; q < 30; ++q) {
      const auto u = static_cast<Vertex>(rng.between(1, n)), v = static_cast<Vertex>(rng.between(1, n));
      const auto want = oracle::beer_dist(adj, b, u, v).value();
      REQUIRE(basic.beer_dist(u, v) == want);
      REQUIRE_FALSE(oracle::validate_path(adj, b, basic.beer_path(u, v), u, v, want));
      for (auto& c : compact) {
        REQUIRE(c.beer_dist(u, v) == want);
        REQUIRE_FALSE(oracle::validate_path(adj, b, c.beer_path(u, v), u, v, want));
      }
    }
  }
}
