#include "beerpath/beer_interval.hpp"

#include <algorithm>
#include <limits>

#include "beerpath/error.hpp"

namespace beerpath {

LastKind last_kind(const IntervalCore& g, Vertex w) {
  const Vertex l = g.last(w);
  if (l <= w) return LastKind::back;
  return g.post(l) > g.post(w) ? LastKind::same : LastKind::next;
}

int classify_interval(const IntervalGraph& g, Vertex u, Vertex w, Vertex v) {
  if (!(u < w && w < v)) raise(Errc::argument_order, "classification needs u < w < v");
  return static_cast<int>(g.dist(u, w).value() + g.dist(w, v).value() - g.dist(u, v).value());
}

CriteriaDiagnostic interval_criteria(const IntervalGraph& g, Vertex u, Vertex w, Vertex v, CriteriaReading reading) {
  if (!(u < w && w < v)) raise(Errc::argument_order, "classification needs u < w < v");
  const auto pv = g.post(v), pw = g.post(w);
  const auto qu = g.post(g.last(u)), qw = g.post(g.last(w));
  CriteriaDiagnostic c;
  if (reading == CriteriaReading::literal) {
    c.criterion1 = qu < pv ? (pw > pv || pw < qu) : (pv < pw && pw < qu);
    c.criterion2 = pw < pv ? (qw > pv || qw < pw) : (pv < qw && qw < pw);
  } else {
    c.criterion1 = qu < pv ? (pw > pv || pw <= qu) : (pv < pw && pw <= qu);
    c.criterion2 = g.last(w) > w && (pw < pv ? (qw >= pv || qw < pw) : (pv <= qw && qw < pw));
  }
  c.predicted = 2 - static_cast<int>(c.criterion1) - static_cast<int>(c.criterion2);
  return c;
}

bool criteria_in_scope(const IntervalGraph& g, Vertex u, Vertex w, Vertex v) {
  return u < w && w < v && g.depth(u) < g.depth(v) && !g.adjacent(u, v) && g.last(u) > u;
}

IntervalBeerIndex::IntervalBeerIndex(const IntervalGraph& g, BeerSet beers)
    : g_(&g), beers_(std::move(beers)), mirror_(g, beers_.list()) {
  if (!g.is_connected()) raise(Errc::disconnected, "beer queries need a connected graph");
  if (beers_.universe() != g.n()) raise(Errc::bad_parameter, "beer set universe differs from vertex count");
  std::array<std::vector<Point3>, 3> pts;
  std::vector<Point2> cover;
  for (Vertex w : beers_.list()) {
    pts[static_cast<int>(last_kind(g, w))].push_back({w, g.post(w), g.post(g.last(w))});
    cover.push_back({w, g.right(w)});
  }
  for (int k = 0; k < 3; ++k) tables_[k] = Grid3D(std::move(pts[k]));
  cover_ = Grid2D(std::move(cover));
}

OuterCandidates IntervalBeerIndex::outer_candidates(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  OuterCandidates out;
  if (Vertex w = beers_.next_after(v); w != kNoVertex) out.after = Candidate{w, d(u, w) + d(w, v)};
  // the mirror image of candidate 1: first beer past both u and v in mirror order
  const std::uint32_t m = std::max(mirror_.mirror(u), mirror_.mirror(v));
  const BitVector& br = mirror_.beer_bits();
  if (const std::size_t j = br.rank1(m) + 1; j <= br.ones()) {
    const Vertex w = mirror_.original(static_cast<std::uint32_t>(br.select1(j)));
    out.before = Candidate{w, d(u, w) + d(w, v)};
  }
  return out;
}

// With k1 = depth(u), dist(u, w) = depth(w) - k1 + e(u, w) for u < w, where
// e(u, w) = base(u) + [post(w) > T(u)]:
//   last(u) on the next level:  base 0, T = post(last(u))
//   last(u) on the same level:  base 1, T = post(last(u))
//   last(u) < u:                base 1, T = post(u)
// and dist(w, v) = k2 - depth(w) + e'(w, v) for w < v, where e' depends on
// the LastKind of w (next: 0 iff post(w) > post(v) and post(last(w)) >= post(v);
// same: 2 iff post(last(w)) < post(v), else 1; back: 1 iff post(w) > post(v),
// else 2). The table cells below enumerate every combination.
std::optional<MiddleCandidate> IntervalBeerIndex::candidate3(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  if (v - u < 2 || beers_.first_in(u + 1, v - 1) == kNoVertex) return std::nullopt;
  const Coord pv = g_->post(v);
  const LastKind ku = last_kind(*g_, u);
  const int base = ku == LastKind::next ? 0 : 1;
  const Coord tu = ku == LastKind::back ? g_->post(u) : g_->post(g_->last(u));

  int best = std::numeric_limits<int>::max();
  Vertex witness = kNoVertex;
  for (LastKind kw : {LastKind::next, LastKind::same, LastKind::back}) {
    for (int c1 = 0; c1 < 2; ++c1)
      for (int c2 = 0; c2 < 2; ++c2)
        for (int c3 = 0; c3 < 2; ++c3) {
          int e = 0;
          if (kw == LastKind::next) e = (c2 && c3) ? 0 : 1;
          if (kw == LastKind::same) e = c3 ? 1 : 2;
          if (kw == LastKind::back) e = c2 ? 1 : 2;
          const int total = base + c1 + e;
          if (total >= best) continue;
          // post(w): c1 -> above T(u), c2 -> above post(v)
          const Coord ylo = std::max(c1 ? tu + 1 : std::numeric_limits<Coord>::min() / 4, c2 ? pv + 1 : 0);
          const Coord yhi = std::min(c1 ? std::numeric_limits<Coord>::max() / 4 : tu, c2 ? std::numeric_limits<Coord>::max() / 4 : pv);
          if (ylo > yhi) continue;
          // post(last(w)): c3 -> at least post(v)
          const Span1D z = c3 ? Span1D{Bound::closed(pv), Bound::none()} : Span1D::below(pv);
          const auto hit = tables_[static_cast<int>(kw)].report({Span1D::open(u, v), Span1D::closed(ylo, yhi), z}, 1);
          if (!hit.empty()) {
            best = total;
            witness = static_cast<Vertex>(hit.front().x);
          }
        }
  }
  const std::uint32_t length = g_->depth(v) - g_->depth(u) + static_cast<std::uint32_t>(best);
  return MiddleCandidate{length - d(u, v), length, witness};
}

// Every such w is adjacent to u. Let v_k <= u < v_{k+1} on v's root chain.
// If u = v_k or u ~ v_{k+1}, any w costs one extra step. Otherwise w
// preserves the distance exactly when it reaches v_{k+1} (r_w > l_{v_{k+1}}).
std::optional<MiddleCandidate> IntervalBeerIndex::candidate4(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  if (u == 1) return std::nullopt;
  const std::uint32_t dist = d(u, v);
  const std::uint32_t k1 = g_->depth(u);
  const Vertex a = g_->ancestor(v, k1);
  Vertex next = kNoVertex;  // v_{k+1} when u is neither v_k nor adjacent to it
  if (a < u) {
    const Vertex c = g_->ancestor(v, k1 + 1);
    if (!g_->adjacent(u, c)) next = c;
  } else if (a > u && !g_->adjacent(u, a)) {
    next = a;
  }
  const Span1D before = Span1D::closed(1, u - 1);
  if (next != kNoVertex) {
    const auto hit = cover_.report({before, Span1D::above(g_->left(next))}, 1);
    if (!hit.empty()) return MiddleCandidate{0, dist, static_cast<Vertex>(hit.front().x)};
  }
  const auto hit = cover_.report({before, Span1D::above(std::min(g_->right(u), g_->right(v)))}, 1);
  if (hit.empty()) return std::nullopt;
  if (u == v) return MiddleCandidate{2, 2, static_cast<Vertex>(hit.front().x)};  // there and back
  return MiddleCandidate{1, dist + 1, static_cast<Vertex>(hit.front().x)};
}

Candidate IntervalBeerIndex::best(Vertex u, Vertex v) const {
  Candidate out{kNoVertex, std::numeric_limits<std::uint32_t>::max()};
  auto take = [&](Vertex w, std::uint32_t len) {
    if (len < out.length) out = {w, len};
  };
  const auto outer = outer_candidates(u, v);
  if (outer.after) take(outer.after->vertex, outer.after->length);
  if (outer.before) take(outer.before->vertex, outer.before->length);
  if (auto c = candidate3(u, v)) take(c->witness, c->length);
  if (auto c = candidate4(u, v)) take(c->witness, c->length);
  return out;
}

std::uint32_t IntervalBeerIndex::beer_dist(Vertex u, Vertex v) const {
  if (beers_.empty()) raise(Errc::no_beer, "beer set is empty");
  const std::uint32_t dist = d(u, v);
  if (beers_.contains(u) || beers_.contains(v)) return dist;
  return best(u, v).length;
}

Path IntervalBeerIndex::beer_path(Vertex u, Vertex v) const {
  if (beers_.empty()) raise(Errc::no_beer, "beer set is empty");
  if (beers_.contains(u) || beers_.contains(v)) return g_->shortest_path(u, v);
  const Vertex w = best(u, v).vertex;
  Path out = g_->shortest_path(u, w);
  const Path tail = g_->shortest_path(w, v);
  out.insert(out.end(), tail.begin() + 1, tail.end());
  return out;
}

std::size_t IntervalBeerIndex::size_in_bits() const {
  std::size_t bits = beers_.bits().size_in_bits() + mirror_.size_in_bits() + cover_.size_in_bits();
  for (const auto& t : tables_) bits += t.size_in_bits();
  return bits;
}

}  // namespace beerpath
