#include <doctest.h>

#include <algorithm>
#include <functional>

#include "beerpath/ordinal_tree.hpp"
#include "beerpath/random.hpp"
#include "support.hpp"

using namespace beerpath;
using Node = OrdinalTree::Node;

namespace {

OrdinalTree g15_tree() {
  const std::vector<Node> parents{0, 1, 1, 1, 1, 2, 2, 2, 3, 4, 4, 7, 7, 9, 11};
  return OrdinalTree::from_parents(parents);
}

// Random level-order parent list: each new node hangs off a node at or after
// the previous node's parent on the level above.
std::vector<Node> random_parents(Rng& rng, std::size_t n) {
  std::vector<Node> p{0};
  for (Node v = 2; v <= n; ++v) {
    const Node lo = std::max<Node>(1, p.back());
    p.push_back(static_cast<Node>(rng.between(lo, std::min<Node>(v - 1, lo + 3))));
  }
  return p;
}

}  // namespace

TEST_CASE("G15 distance tree") {
  auto t = g15_tree();
  CHECK(t.size() == 15);
  CHECK(t.height() == 3);
  CHECK(t.level_size(0) == 1);
  CHECK(t.level_size(1) == 4);
  CHECK(t.level_size(2) == 6);
  CHECK(t.level_size(3) == 4);

  CHECK(t.convert(13, Traversal::level, Traversal::post) == 3);
  CHECK(t.convert(3, Traversal::level, Traversal::post) == 9);
  CHECK(t.convert(1, Traversal::pre, Traversal::level) == 1);
  CHECK(t.post(1) == 15);

  CHECK(t.ancestor(13, 1) == 2);
  CHECK(t.ancestor(13, 3) == 13);
  CHECK(t.ancestor(15, 0) == 1);
  CHECK_THROWS_AS(t.ancestor(6, 3), Error);

  CHECK(t.first_on_level(2) == 6);
  CHECK(t.last_on_level(2) == 11);
  CHECK_THROWS_AS(t.first_on_level(4), Error);
  CHECK(t.subtree_post_interval(2) == std::pair<std::uint32_t, std::uint32_t>{1, 6});

  CHECK(t.prev_internal(2) == 2);
  CHECK(t.prev_internal(6) == 4);  // first leaf of level 2: last internal node of level 1
  CHECK(t.prev_internal(8) == 7);
  CHECK(t.last_child(2) == 8);
  CHECK(t.last_child(7) == 13);
  CHECK(t.last_child(6) == 0);
}

TEST_CASE("tiny trees") {
  auto one = OrdinalTree::from_parents(std::vector<Node>{0});
  CHECK(one.depth(1) == 0);
  CHECK(one.post(1) == 1);
  CHECK(one.prev_internal(1) == 0);

  auto path = OrdinalTree::from_parents(std::vector<Node>{0, 1, 2});
  CHECK(path.depth(1) == 0);
  CHECK(path.depth(2) == 1);
  CHECK(path.depth(3) == 2);
  CHECK(path.post(3) == 1);
}

TEST_CASE("malformed parent lists") {
  auto code = [](std::vector<Node> p) {
    try {
      OrdinalTree::from_parents(p);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::parse_error;
  };
  CHECK(code({}) == Errc::malformed_tree);
  CHECK(code({0, 0}) == Errc::malformed_tree);
  CHECK(code({0, 2}) == Errc::malformed_tree);
  CHECK(code({0, 1, 3}) == Errc::malformed_tree);
  CHECK(code({1}) == Errc::malformed_tree);
  CHECK(code({0, 1, 2, 1}) == Errc::malformed_tree);
}

TEST_CASE("random trees against pointer walks") {
  Rng rng(5);
  for (std::size_t n : {1, 2, 3, 10, 100, 1000, 10000}) {
    const auto parents = random_parents(rng, n);
    const auto t = OrdinalTree::from_parents(parents);
    REQUIRE(t.size() == n);

    std::vector<std::vector<Node>> kids(n + 1);
    for (Node v = 2; v <= n; ++v) kids[parents[v - 1]].push_back(v);
    std::vector<Node> pre, post;
    std::function<void(Node)> walk = [&](Node v) {
      pre.push_back(v);
      for (Node c : kids[v]) walk(c);
      post.push_back(v);
    };
    walk(1);

    std::vector<std::uint32_t> depth(n + 1), size(n + 1, 1);
    for (Node v = 2; v <= n; ++v) depth[v] = depth[parents[v - 1]] + 1;
    for (Node v = static_cast<Node>(n); v >= 2; --v) size[parents[v - 1]] += size[v];

    for (std::uint32_t r = 1; r <= n; ++r) {
      REQUIRE(t.post(post[r - 1]) == r);
      REQUIRE(t.pre(pre[r - 1]) == r);
      for (auto a : {Traversal::level, Traversal::pre, Traversal::post})
        for (auto b : {Traversal::level, Traversal::pre, Traversal::post})
          REQUIRE(t.convert(t.convert(r, a, b), b, a) == r);
    }
    for (Node v = 1; v <= n; ++v) {
      REQUIRE(t.depth(v) == depth[v]);
      REQUIRE(t.subtree_size(v) == size[v]);
      auto [lo, hi] = t.subtree_post_interval(v);
      REQUIRE(hi == t.post(v));
      REQUIRE(hi - lo + 1 == size[v]);
      if (v > 1) REQUIRE(t.ancestor(v, depth[v] - 1) == parents[v - 1]);
      const std::uint32_t d = static_cast<std::uint32_t>(rng.below(depth[v] + 1));
      Node a = v;
      while (depth[a] > d) a = parents[a - 1];
      REQUIRE(t.ancestor(v, d) == a);
      REQUIRE(t.child_count(v) == kids[v].size());
      REQUIRE(t.last_child(v) == (kids[v].empty() ? 0 : kids[v].back()));
      Node pi = v;
      while (pi >= 1 && kids[pi].empty()) --pi;
      REQUIRE(t.prev_internal(v) == pi);
    }
    // same-level nodes: level order agrees with post order
    for (Node v = 2; v <= n; ++v)
      if (depth[v] == depth[v - 1]) REQUIRE(t.post(v - 1) < t.post(v));
  }
}
