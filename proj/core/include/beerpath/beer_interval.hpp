#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "beerpath/beer_proper.hpp"
#include "beerpath/beer_set.hpp"
#include "beerpath/interval.hpp"
#include "beerpath/range_index.hpp"

namespace beerpath {

// Where last(w) sits relative to w in the distance tree.
enum class LastKind {
  back,  // last(w) < w: every neighbour precedes w
  same,  // last(w) > w on the same level
  next,  // last(w) > w on the next level
};

LastKind last_kind(const IntervalCore& g, Vertex w);

// dist(u,w) + dist(w,v) - dist(u,v) from three distance queries; u < w < v.
int classify_interval(const IntervalGraph& g, Vertex u, Vertex w, Vertex v);

// The two preservation criteria and the +k they predict.
//   literal:   strict post-order comparisons throughout.
//   inclusive: w = last(u) and last(w) = v count as inside, and the range
//              (w, last(w)] is empty when last(w) < w.
// Only the inclusive reading matches classify_interval, and only on triples
// with depth(u) < depth(v), u and v non-adjacent and last(u) > u.
enum class CriteriaReading { literal, inclusive };

struct CriteriaDiagnostic {
  bool criterion1 = false;
  bool criterion2 = false;
  int predicted = 2;
};
CriteriaDiagnostic interval_criteria(const IntervalGraph& g, Vertex u, Vertex w, Vertex v,
                                     CriteriaReading reading = CriteriaReading::inclusive);
// The triples the criteria are meant for.
bool criteria_in_scope(const IntervalGraph& g, Vertex u, Vertex w, Vertex v);

// Candidates 1-4 over range structures: three 3D tables keyed by
// (w, post(w), post(last(w))) split by LastKind, a 2D grid on (w, r_w), and
// the mirror map for candidate 2.
class IntervalBeerIndex {
 public:
  IntervalBeerIndex(const IntervalGraph& g, BeerSet beers);

  const IntervalGraph& graph() const { return *g_; }
  const BeerSet& beers() const { return beers_; }
  const MirrorMap& mirror() const { return mirror_; }
  const Grid3D& table(LastKind k) const { return tables_[static_cast<int>(k)]; }

  // after: smallest beer > v; before: the beer with largest right endpoint
  // below min(r_u, r_v).
  OuterCandidates outer_candidates(Vertex u, Vertex v) const;
  // Best beer strictly between u and v.
  std::optional<MiddleCandidate> candidate3(Vertex u, Vertex v) const;
  // Beers w < u with r_w > min(r_u, r_v); all adjacent to u.
  std::optional<MiddleCandidate> candidate4(Vertex u, Vertex v) const;

  std::uint32_t beer_dist(Vertex u, Vertex v) const;
  Path beer_path(Vertex u, Vertex v) const;

  std::size_t size_in_bits() const;

 private:
  std::uint32_t d(Vertex u, Vertex v) const { return g_->dist(u, v).value(); }
  Candidate best(Vertex u, Vertex v) const;

  const IntervalGraph* g_;
  BeerSet beers_;
  MirrorMap mirror_;
  std::array<Grid3D, 3> tables_;
  Grid2D cover_;
};

}  // namespace beerpath
