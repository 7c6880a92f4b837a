#include "beerpath/beer_proper.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "beerpath/error.hpp"

namespace beerpath {

namespace {

std::uint32_t default_threshold(std::size_t n) {
  return n <= 1 ? 0 : static_cast<std::uint32_t>(std::bit_width(n - 1));
}

Path join(const Path& a, const Path& b) {
  Path out = a;
  out.insert(out.end(), b.begin() + 1, b.end());
  return out;
}

}  // namespace

int classify_proper(const ProperIntervalGraph& g, Vertex u, Vertex w, Vertex v) {
  if (!(u < w && w < v)) raise(Errc::argument_order, "classification needs u < w < v");
  const auto pu = g.post(u), pw = g.post(w), pv = g.post(v);
  if (pu < pv) return (pw < pu || pw > pv) ? 0 : 1;
  return (pv < pw && pw < pu) ? 0 : 1;
}

ProperBeerQueries::ProperBeerQueries(const ProperIntervalGraph& g, BeerSet beers,
                                     std::optional<std::uint32_t> threshold)
    : g_(&g), beers_(std::move(beers)), threshold_(threshold.value_or(default_threshold(g.n()))) {
  if (!g.is_connected()) raise(Errc::disconnected, "beer queries need a connected graph");
  if (beers_.universe() != g.n()) raise(Errc::bad_parameter, "beer set universe differs from vertex count");
}

OuterCandidates ProperBeerQueries::outer_candidates(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  OuterCandidates out;
  if (Vertex w = beers_.next_after(v); w != kNoVertex) out.after = Candidate{w, d(u, w) + d(w, v)};
  if (Vertex w = beers_.last_before(u); w != kNoVertex) out.before = Candidate{w, d(u, w) + d(w, v)};
  return out;
}

std::optional<MiddleCandidate> ProperBeerQueries::middle_by_scan(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  if (v - u < 2) return std::nullopt;
  const std::uint32_t k1 = g_->depth(u);
  const Vertex a = g_->ancestor(v, k1);
  // with a > u the vertices (u, a) sit on level k1 after u: start one slice higher
  const auto chain = g_->chain(v, a > u ? k1 - 1 : k1);
  const std::uint32_t dist = d(u, v);
  Vertex fallback = kNoVertex;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    // preserving vertices form a prefix of each slice
    const Vertex w = beers_.first_in(std::max(chain[i], u + 1), chain[i + 1] - 1);
    if (w == kNoVertex) continue;
    if (classify_proper(*g_, u, w, v) == 0) return MiddleCandidate{0, dist, w};
    if (fallback == kNoVertex) fallback = w;
  }
  if (fallback == kNoVertex) return std::nullopt;
  return MiddleCandidate{1, dist + 1, fallback};
}

std::optional<MiddleCandidate> ProperBeerQueries::middle_by_ranges(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  if (v - u < 2) return std::nullopt;
  const Vertex any = beers_.first_in(u + 1, v - 1);
  if (any == kNoVertex) return std::nullopt;
  const std::uint32_t dist = d(u, v);
  if (auto w = preserving_beer(u, v)) return MiddleCandidate{0, dist, *w};
  return MiddleCandidate{1, dist + 1, any};
}

std::optional<MiddleCandidate> ProperBeerQueries::middle_candidate(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  if (v - u < 2) return std::nullopt;
  return d(u, v) < threshold_ ? middle_by_scan(u, v) : middle_by_ranges(u, v);
}

std::uint32_t ProperBeerQueries::beer_dist(Vertex u, Vertex v) const {
  if (beers_.empty()) raise(Errc::no_beer, "beer set is empty");
  const std::uint32_t dist = d(u, v);
  if (beers_.contains(u) || beers_.contains(v)) return dist;
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  const auto outer = outer_candidates(u, v);
  if (outer.after) best = std::min(best, outer.after->length);
  if (outer.before) best = std::min(best, outer.before->length);
  if (auto mid = middle_candidate(u, v)) best = std::min(best, mid->length);
  return best;
}

Path ProperBeerQueries::beer_path(Vertex u, Vertex v) const {
  if (beers_.empty()) raise(Errc::no_beer, "beer set is empty");
  if (beers_.contains(u) || beers_.contains(v)) return g_->shortest_path(u, v);
  Vertex best_w = kNoVertex;
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  const auto outer = outer_candidates(u, v);
  for (const auto& c : {outer.after, outer.before})
    if (c && c->length < best) {
      best = c->length;
      best_w = c->vertex;
    }
  if (auto mid = middle_candidate(u, v); mid && mid->length < best) {
    best_w = mid->witness;
    if (best_w == kNoVertex) best_w = middle_by_scan(u, v)->witness;
  }
  return join(g_->shortest_path(u, best_w), g_->shortest_path(best_w, v));
}

ProperBeerIndex::ProperBeerIndex(const ProperIntervalGraph& g, BeerSet beers, ProperBeerOptions opt)
    : ProperBeerQueries(g, std::move(beers), opt.scan_threshold) {
  std::vector<Point2> pts;
  pts.reserve(beers_.size());
  for (Vertex w : beers_.list()) pts.push_back({w, g.post(w)});
  grid_ = Grid2D(std::move(pts));
}

std::optional<Vertex> ProperBeerIndex::preserving_beer(Vertex u, Vertex v) const {
  const Coord pu = g_->post(u), pv = g_->post(v);
  const Span1D between = Span1D::open(u, v);
  std::vector<Point2> hit;
  if (pu < pv) {
    hit = grid_.report({between, Span1D::below(pu)}, 1);
    if (hit.empty()) hit = grid_.report({between, Span1D::above(pv)}, 1);
  } else {
    hit = grid_.report({between, Span1D::open(pv, pu)}, 1);
  }
  if (hit.empty()) return std::nullopt;
  return static_cast<Vertex>(hit.front().x);
}

CompactBeerIndex::CompactBeerIndex(const ProperIntervalGraph& g, BeerSet beers, std::uint32_t delta,
                                   CompactOptions opt)
    : ProperBeerQueries(g, std::move(beers), opt.scan_threshold), delta_(delta), explicit_post_(opt.explicit_post_bits) {
  if (delta < 2) raise(Errc::bad_parameter, "Delta must be at least 2");
  const OrdinalTree& t = g.distance_tree();
  t_ = &t;
  const std::size_t n = t.size();
  const std::uint32_t height = t.height();

  // residue minimising the selected-node count; level 0 is always selected
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::uint32_t r = 0; r < delta; ++r) {
    std::size_t c = r == 0 ? 0 : 1;
    for (std::uint32_t dd = r; dd <= height; dd += delta) c += t.level_size(dd);
    if (c < best) {
      best = c;
      residue_ = r;
    }
  }
  levels_.push_back(0);
  for (std::uint32_t dd = residue_ == 0 ? delta : residue_; dd <= height; dd += delta) levels_.push_back(dd);

  std::vector<std::uint64_t> sel;
  for (auto s : levels_)
    for (Vertex x = t.first_on_level(s); x <= t.last_on_level(s); ++x) sel.push_back(x);
  selected_ = BitVector(n, sel, BitVectorMode::compressed);

  std::vector<OrdinalTree::Node> parents;
  parents.reserve(sel.size());
  for (auto x64 : sel) {
    const auto x = static_cast<Vertex>(x64);
    parents.push_back(x == 1 ? 0 : srank(t.ancestor(x, prev_selected(t.depth(x) - 1))));
  }
  contracted_ = OrdinalTree::from_parents(parents);

  marks_.assign(sel.size() + 1, false);
  std::vector<Point2> sel_pts;
  for (Vertex w : beers_.list()) {
    const Vertex x = t.ancestor(w, prev_selected(t.depth(w)));
    if (x == w)
      sel_pts.push_back({w, t.post(w)});
    else
      marks_[srank(x)] = true;
  }
  selected_grid_ = Grid2D(std::move(sel_pts));
  std::vector<Point2> piece_pts;
  for (std::uint32_t r = 1; r <= sel.size(); ++r)
    if (marks_[r]) piece_pts.push_back({r, contracted_.post(r)});
  contracted_grid_ = Grid2D(std::move(piece_pts));

  std::vector<std::uint32_t> below(n + 1, 0);
  for (Vertex x = 1; x <= n; ++x) below[x] = beers_.contains(x) ? 1 : 0;
  for (Vertex x = static_cast<Vertex>(n); x >= 2; --x) below[t.parent(x)] += below[x];
  prefix_.assign(height + 1, {});
  level_posts_.assign(height + 1, {});
  for (auto s : levels_) {
    std::uint32_t run = 0;
    std::vector<Coord> posts;
    for (Vertex x = t.first_on_level(s); x <= t.last_on_level(s); ++x) {
      run += below[x];
      prefix_[s].push_back(run);
      posts.push_back(t.post(x));
    }
    level_posts_[s] = PredecessorSet(std::move(posts));
  }

  if (explicit_post_) {
    std::vector<std::uint64_t> ones;
    for (std::uint32_t p = 1; p <= n; ++p)
      if (beers_.contains(t.from_post(p))) ones.push_back(p);
    post_bits_ = BitVector(n, ones);
  } else {
    post_samples_.assign(n / 64 + 1, 0);
    std::uint32_t run = 0;
    for (std::uint32_t p = 1; p <= n; ++p) {
      if (beers_.contains(t.from_post(p))) ++run;
      if (p % 64 == 0) post_samples_[p / 64] = run;
    }
  }
}

bool CompactBeerIndex::marked(Vertex x) const {
  if (!selected_.access(x)) return false;
  return marks_[srank(x)];
}

bool CompactBeerIndex::is_selected_level(std::uint32_t d) const {
  return d == 0 || (d >= residue_ && (d - residue_) % delta_ == 0);
}

std::optional<std::uint32_t> CompactBeerIndex::next_selected(std::uint32_t d) const {
  std::uint32_t s = d;
  if (d > 0) {
    if (d <= residue_) {
      s = residue_ == 0 ? delta_ : residue_;
      if (d > s) s += delta_;
    } else {
      s = d + (delta_ - (d - residue_) % delta_) % delta_;
    }
  }
  if (s > t_->height()) return std::nullopt;
  return s;
}

std::uint32_t CompactBeerIndex::prev_selected(std::uint32_t d) const {
  if (d < residue_ || d == 0) return 0;
  return d - (d - residue_) % delta_;
}

Vertex CompactBeerIndex::descend(Vertex u, std::uint32_t level) const {
  Vertex x = u;
  for (std::uint32_t dd = t_->depth(u); dd < level; ++dd) {
    const Vertex p = t_->prev_internal(x);
    if (p == kNoVertex || t_->depth(p) != dd) return kNoVertex;
    x = t_->last_child(p);
  }
  return x;
}

std::size_t CompactBeerIndex::post_rank(std::uint32_t p) const {
  if (explicit_post_) return post_bits_.rank1(p);
  std::size_t c = post_samples_[p / 64];
  for (std::uint32_t q = (p / 64) * 64 + 1; q <= p; ++q)
    if (beers_.contains(t_->from_post(q))) ++c;
  return c;
}

std::uint32_t CompactBeerIndex::prefix_count(std::uint32_t level, Vertex x) const {
  return prefix_[level][x - t_->first_on_level(level)];
}

bool CompactBeerIndex::contracted_nonempty(std::uint32_t s1, std::uint32_t s2, Span1D post_span) const {
  const Coord lo = srank(t_->first_on_level(s1));
  const Coord hi = srank(t_->first_on_level(s2)) - 1;  // T' ranks on levels [s1, s2)
  return !contracted_grid_.empty({Span1D::closed(lo, hi), post_span});
}

bool CompactBeerIndex::selected_nonempty(Vertex first, Vertex last, Span1D post_span) const {
  if (first > last) return false;
  return !selected_grid_.empty({Span1D::closed(first, last), post_span});
}

// Beers strictly inside subtree(a) after v' in post order, minus those at or
// below level s2; nonzero means a beer right of the chain above level s2.
std::int64_t CompactBeerIndex::right_count(Vertex a, Vertex vs, std::uint32_t s2) const {
  const std::uint32_t pa = t_->post(a), pvs = t_->post(vs);
  const auto z = level_posts_[s2].pred(pa);  // exists: post(v') < post(a)
  const Vertex zn = t_->from_post(static_cast<std::uint32_t>(*z));
  const auto inside = static_cast<std::int64_t>(post_rank(pa - 1)) - static_cast<std::int64_t>(post_rank(pvs));
  const auto deep = static_cast<std::int64_t>(prefix_count(s2, zn)) - static_cast<std::int64_t>(prefix_count(s2, vs));
  return inside - deep;
}

bool CompactBeerIndex::preserving_exists(Vertex u, Vertex v) const {
  const OrdinalTree& t = *t_;
  const std::uint32_t k1 = t.depth(u), k2 = t.depth(v);
  const std::uint32_t pu = t.post(u), pv = t.post(v);
  const auto s1o = next_selected(k1);
  const std::uint32_t s2 = prev_selected(k2);
  const bool middle = s1o && *s1o < s2;
  const std::uint32_t s1 = middle ? *s1o : 0;

  auto first_beer = [&](std::uint32_t dd) { return beers_.first_in(t.first_on_level(dd), t.last_on_level(dd)); };
  auto last_beer = [&](std::uint32_t dd) { return beers_.last_in(t.first_on_level(dd), t.last_on_level(dd)); };
  // explicit levels: [lo, hi] minus the middle band handled by the structure
  auto levels = [&](std::uint32_t lo, std::uint32_t hi, std::uint32_t band_lo, std::uint32_t band_hi, auto&& check) {
    for (std::uint32_t dd = lo; dd <= hi && dd <= t.height(); ++dd) {
      if (middle && dd >= band_lo && dd <= band_hi) continue;
      if (check(dd)) return true;
    }
    return false;
  };

  if (pu < pv) {
    // type 1: depth in (k1, k2], post < post(u)
    auto t1 = [&](std::uint32_t dd) {
      const Vertex w = first_beer(dd);
      return w != kNoVertex && t.post(w) < pu;
    };
    if (k2 > k1 && levels(k1 + 1, k2, s1 + 1, s2, t1)) return true;
    // type 2: depth in [k1, k2), post > post(v)
    auto t2 = [&](std::uint32_t dd) {
      const Vertex w = last_beer(dd);
      return w != kNoVertex && t.post(w) > pv;
    };
    if (k2 > k1 && levels(k1, k2 - 1, s1, s2 - 1, t2)) return true;
    if (!middle) return false;

    const Vertex u1 = descend(u, s1);
    if (u1 != kNoVertex) {
      // closed at post'(u'): a piece rooted at u' lies entirely left of u
      if (contracted_nonempty(s1, s2, {Bound::none(), Bound::closed(contracted_.post(srank(u1)))})) return true;
      if (selected_nonempty(t.last_on_level(s1) + 1, t.last_on_level(s2), Span1D::below(t.post(u1)))) return true;
    }
    const Vertex a = t.ancestor(v, s1), vs = t.ancestor(v, s2);
    if (selected_nonempty(t.first_on_level(s1), t.first_on_level(s2) - 1, Span1D::above(t.post(vs)))) return true;
    if (contracted_nonempty(s1, s2, Span1D::above(contracted_.post(srank(a))))) return true;
    return right_count(a, vs, s2) > 0;
  }

  // type 3: depth in (k1, k2), post(v) < post < post(u)
  auto t3 = [&](std::uint32_t dd) {
    const Vertex w = beers_.first_in(t.ancestor(v, dd), t.last_on_level(dd));
    return w != kNoVertex && t.post(w) < pu;
  };
  if (k2 > k1 + 1 && levels(k1 + 1, k2 - 1, s1 + 1, s2 - 1, t3)) return true;
  if (!middle) return false;
  const Vertex u1 = descend(u, s1);
  const Vertex a = t.ancestor(v, s1), vs = t.ancestor(v, s2);
  if (selected_nonempty(t.last_on_level(s1) + 1, t.first_on_level(s2) - 1, Span1D::open(t.post(vs), t.post(u1))))
    return true;
  if (contracted_nonempty(s1, s2, {Bound::open(contracted_.post(srank(a))), Bound::closed(contracted_.post(srank(u1)))}))
    return true;
  return right_count(a, vs, s2) > 0;
}

std::optional<Vertex> CompactBeerIndex::preserving_beer(Vertex u, Vertex v) const {
  if (preserving_exists(u, v)) return kNoVertex;
  return std::nullopt;
}

CompactBeerIndex::Space CompactBeerIndex::space() const {
  Space s;
  s.selected_bits = selected_.size_in_bits() + 32 * levels_.size();
  s.contracted_tree_bits = contracted_.size_in_bits() + marks_.size();
  s.contracted_grid_bits = contracted_grid_.size_in_bits();
  s.selected_grid_bits = selected_grid_.size_in_bits();
  for (const auto& p : prefix_) s.prefix_count_bits += 32 * p.size();
  for (const auto& p : level_posts_) s.predecessor_bits += p.size_in_bits();
  s.post_view_bits = explicit_post_ ? post_bits_.size_in_bits() : 32 * post_samples_.size();
  return s;
}

std::vector<std::uint32_t> standard_deltas(std::size_t n) {
  const double lg = n < 2 ? 0.0 : std::log2(static_cast<double>(n));
  const double lglg = lg <= 1.0 ? 0.0 : std::log2(lg);
  std::vector<std::uint32_t> out;
  for (double d : {2.0, std::ceil(lg), std::ceil(lg * lglg)}) {
    const auto x = std::max<std::uint32_t>(2, static_cast<std::uint32_t>(d));
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  return out;
}

}  // namespace beerpath
