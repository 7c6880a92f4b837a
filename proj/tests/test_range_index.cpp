#include <doctest.h>

#include <algorithm>

#include "beerpath/random.hpp"
#include "beerpath/range_index.hpp"

using namespace beerpath;

namespace {

Span1D random_span(Rng& rng, Coord hi) {
  auto bound = [&]() -> Bound {
    switch (rng.below(3)) {
      case 0: return Bound::none();
      case 1: return Bound::open(static_cast<Coord>(rng.between(0, hi + 1)));
      default: return Bound::closed(static_cast<Coord>(rng.between(0, hi + 1)));
    }
  };
  Span1D s{bound(), bound()};
  if (s.lo.kind != Bound::Kind::unbounded && s.hi.kind != Bound::Kind::unbounded && s.lo.value > s.hi.value)
    std::swap(s.lo.value, s.hi.value);
  return s;
}

template <class P>
bool less(const P& a, const P& b) {
  if constexpr (requires { a.z; }) return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
  else return std::tie(a.x, a.y) < std::tie(b.x, b.y);
}

template <class P>
std::vector<P> sorted(std::vector<P> v) {
  std::sort(v.begin(), v.end(), less<P>);
  return v;
}

}  // namespace

TEST_CASE("2D by hand") {
  Grid2D g({{1, 1}, {2, 3}});
  CHECK_FALSE(g.empty({Span1D{Bound::open(1), Bound::closed(2)}, Span1D::closed(3, 3)}));
  CHECK(g.empty({Span1D::open(1, 2), Span1D::all()}));
  CHECK(Grid2D(std::vector<Point2>{}).empty({Span1D::all(), Span1D::all()}));
  // the beer point (8, post 5) of G15 inside the candidate-3 rectangle for (3, 13)
  CHECK_FALSE(Grid2D({{8, 5}}).empty({Span1D::open(3, 13), Span1D::open(3, 9)}));
}

TEST_CASE("3D by hand") {
  Grid3D g({{1, 1, 1}, {2, 2, 2}});
  auto r = g.report({Span1D::closed(1, 2), Span1D::closed(1, 1), Span1D::all()});
  REQUIRE(r.size() == 1);
  CHECK(r[0] == Point3{1, 1, 1});
  CHECK(g.report({Span1D::all(), Span1D::all(), Span1D::all()}, 0).empty());
  CHECK_FALSE(g.empty({Span1D::all(), Span1D::all(), Span1D::all()}));
  CHECK(g.empty({Span1D::open(1, 2), Span1D::all(), Span1D::all()}));
}

TEST_CASE("malformed rectangles") {
  Grid2D g({{1, 1}});
  try {
    g.count({Span1D::closed(5, 2), Span1D::all()});
    FAIL("inverted bounds accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::malformed_rect);
  }
  CHECK(g.empty({Span1D::open(2, 2), Span1D::all()}));  // open on one integer: empty, not malformed
}

TEST_CASE("predecessor") {
  PredecessorSet s({3, 7, 9});
  CHECK(s.pred(8) == 7);
  CHECK_FALSE(s.pred(3).has_value());
  CHECK(s.pred(100) == 9);
  CHECK(s.pred(4) == 3);
  CHECK_FALSE(PredecessorSet(std::vector<Coord>{}).pred(5).has_value());

  Rng rng(3);
  std::vector<Coord> v;
  for (int i = 0; i < 500; ++i) v.push_back(static_cast<Coord>(rng.below(5000)));
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  PredecessorSet p(v);
  for (Coord i = -2; i < 5010; ++i) {
    auto it = std::lower_bound(v.begin(), v.end(), i);
    if (it == v.begin()) REQUIRE_FALSE(p.pred(i).has_value());
    else REQUIRE(p.pred(i) == *std::prev(it));
  }
}

TEST_CASE("duplicates all count") {
  Grid2D g({{2, 2}, {2, 2}, {2, 3}});
  CHECK(g.count({Span1D::closed(2, 2), Span1D::closed(2, 2)}) == 2);
  Grid3D h({{2, 2, 2}, {2, 2, 2}});
  CHECK(h.count({Span1D::all(), Span1D::all(), Span1D::all()}) == 2);
  CHECK(h.report({Span1D::all(), Span1D::all(), Span1D::all()}).size() == 2);
}

TEST_CASE("random boxes against a linear scan") {
  Rng rng(2024);
  for (Coord side : {4, 30, 1000}) {
    std::vector<Point2> p2;
    std::vector<Point3> p3;
    for (int i = 0; i < 1000; ++i) {
      p2.push_back({static_cast<Coord>(rng.between(1, side)), static_cast<Coord>(rng.between(1, side))});
      p3.push_back({static_cast<Coord>(rng.between(1, side)), static_cast<Coord>(rng.between(1, side)),
                    static_cast<Coord>(rng.between(1, side))});
    }
    Grid2D g2(p2);
    Grid3D g3(p3);
    for (int q = 0; q < 3000; ++q) {
      Rect2 r2{random_span(rng, side), random_span(rng, side)};
      Rect3 r3{random_span(rng, side), random_span(rng, side), random_span(rng, side)};
      std::vector<Point2> m2;
      std::vector<Point3> m3;
      for (auto& p : p2)
        if (contains(r2, p)) m2.push_back(p);
      for (auto& p : p3)
        if (contains(r3, p)) m3.push_back(p);
      REQUIRE(g2.count(r2) == m2.size());
      REQUIRE(g2.empty(r2) == m2.empty());
      REQUIRE(sorted(g2.report(r2)) == sorted(m2));
      REQUIRE(g3.count(r3) == m3.size());
      REQUIRE(g3.empty(r3) == m3.empty());
      REQUIRE(sorted(g3.report(r3, m3.size())) == sorted(m3));
      const auto k = rng.below(4);
      auto some = g3.report(r3, k);
      REQUIRE(some.size() == std::min<std::size_t>(k, m3.size()));
      for (auto& p : some) REQUIRE(contains(r3, p));
    }
  }
}
