#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "beerpath/beer_set.hpp"
#include "beerpath/ordinal_tree.hpp"
#include "beerpath/proper_interval.hpp"
#include "beerpath/range_index.hpp"

namespace beerpath {

struct Candidate {
  Vertex vertex = kNoVertex;
  std::uint32_t length = 0;
};

struct OuterCandidates {
  std::optional<Candidate> after;   // smallest beer > v
  std::optional<Candidate> before;  // candidate 2 (largest beer < u for proper graphs)
};

// Best beer strictly between u and v: `extra` over dist(u, v). The witness
// may be 0 when only existence is known.
struct MiddleCandidate {
  std::uint32_t extra = 0;
  std::uint32_t length = 0;
  Vertex witness = kNoVertex;
};

// dist(u,w) + dist(w,v) - dist(u,v) for u < w < v, read off post-order ranks.
int classify_proper(const ProperIntervalGraph& g, Vertex u, Vertex w, Vertex v);

// Query logic shared by the basic and compact indexes. Only the test
// "does a distance-preserving beer lie strictly between u and v" differs.
class ProperBeerQueries {
 public:
  virtual ~ProperBeerQueries() = default;

  const ProperIntervalGraph& graph() const { return *g_; }
  const BeerSet& beers() const { return beers_; }
  std::uint32_t scan_threshold() const { return threshold_; }

  OuterCandidates outer_candidates(Vertex u, Vertex v) const;
  std::optional<MiddleCandidate> middle_candidate(Vertex u, Vertex v) const;
  // Slice-by-slice walk along v's root chain; O(dist) time.
  std::optional<MiddleCandidate> middle_by_scan(Vertex u, Vertex v) const;
  std::optional<MiddleCandidate> middle_by_ranges(Vertex u, Vertex v) const;

  std::uint32_t beer_dist(Vertex u, Vertex v) const;
  Path beer_path(Vertex u, Vertex v) const;

 protected:
  ProperBeerQueries(const ProperIntervalGraph& g, BeerSet beers, std::optional<std::uint32_t> threshold);

  // nullopt: no preserving beer in (u, v). Otherwise a witness, or 0 when
  // the structure only answers existence. Requires u < v.
  virtual std::optional<Vertex> preserving_beer(Vertex u, Vertex v) const = 0;

  std::uint32_t d(Vertex u, Vertex v) const { return g_->dist(u, v).value(); }

  const ProperIntervalGraph* g_;
  BeerSet beers_;
  std::uint32_t threshold_;
};

struct ProperBeerOptions {
  std::optional<std::uint32_t> scan_threshold;  // default ceil(log2 n)
};

// Distance tree, B, and a 2D grid over (w, post(w)) for w in B.
class ProperBeerIndex : public ProperBeerQueries {
 public:
  ProperBeerIndex(const ProperIntervalGraph& g, BeerSet beers, ProperBeerOptions opt = {});

  const Grid2D& grid() const { return grid_; }
  std::size_t size_in_bits() const { return grid_.size_in_bits() + beers_.bits().size_in_bits(); }

 protected:
  std::optional<Vertex> preserving_beer(Vertex u, Vertex v) const override;

 private:
  Grid2D grid_;
};

struct CompactOptions {
  bool explicit_post_bits = false;  // store P as a bit vector instead of sampling
  std::optional<std::uint32_t> scan_threshold;
};

// Every Delta-th tree level is selected; the pieces between selected levels
// are contracted into a tree T' whose nodes carry beer marks.
class CompactBeerIndex : public ProperBeerQueries {
 public:
  CompactBeerIndex(const ProperIntervalGraph& g, BeerSet beers, std::uint32_t delta, CompactOptions opt = {});

  struct Space {
    std::size_t selected_bits = 0;
    std::size_t contracted_tree_bits = 0;
    std::size_t contracted_grid_bits = 0;
    std::size_t selected_grid_bits = 0;
    std::size_t prefix_count_bits = 0;
    std::size_t predecessor_bits = 0;
    std::size_t post_view_bits = 0;
    std::size_t total() const {
      return selected_bits + contracted_tree_bits + contracted_grid_bits + selected_grid_bits + prefix_count_bits +
             predecessor_bits + post_view_bits;
    }
  };

  std::uint32_t delta() const { return delta_; }
  std::uint32_t residue() const { return residue_; }
  const std::vector<std::uint32_t>& selected_levels() const { return levels_; }
  std::size_t selected_count() const { return selected_.ones(); }
  const OrdinalTree& contracted_tree() const { return contracted_; }
  bool marked(Vertex x) const;  // x selected; beer below x inside its piece
  Space space() const;
  std::size_t size_in_bits() const { return space().total(); }

  // Public for testing; requires u < v, u, v not beer.
  bool preserving_exists(Vertex u, Vertex v) const;

 protected:
  std::optional<Vertex> preserving_beer(Vertex u, Vertex v) const override;

 private:
  bool is_selected_level(std::uint32_t d) const;
  std::optional<std::uint32_t> next_selected(std::uint32_t d) const;  // smallest selected level >= d
  std::uint32_t prev_selected(std::uint32_t d) const;                 // largest selected level <= d
  std::uint32_t srank(Vertex x) const { return static_cast<std::uint32_t>(selected_.rank1(x)); }
  Vertex descend(Vertex u, std::uint32_t level) const;
  std::size_t post_rank(std::uint32_t p) const;  // beers with post <= p
  std::uint32_t prefix_count(std::uint32_t level, Vertex x) const;
  bool contracted_nonempty(std::uint32_t s1, std::uint32_t s2, Span1D post_span) const;
  bool selected_nonempty(Vertex first, Vertex last, Span1D post_span) const;
  std::int64_t right_count(Vertex a, Vertex vs, std::uint32_t s2) const;

  const OrdinalTree* t_ = nullptr;
  std::uint32_t delta_ = 2;
  std::uint32_t residue_ = 0;
  std::vector<std::uint32_t> levels_;
  BitVector selected_;
  OrdinalTree contracted_;
  std::vector<bool> marks_;  // by T' rank
  Grid2D contracted_grid_;   // (T' rank, post') of marked pieces
  Grid2D selected_grid_;     // (w, post(w)) for selected beers
  std::vector<std::vector<std::uint32_t>> prefix_;  // per level, inclusive subtree beer counts
  std::vector<PredecessorSet> level_posts_;
  std::vector<std::uint32_t> post_samples_;
  BitVector post_bits_;
  bool explicit_post_ = false;
};

// Delta in {2, ceil(log n), ceil(log n * log log n)}, logs base 2, each at
// least 2, duplicates removed.
std::vector<std::uint32_t> standard_deltas(std::size_t n);

}  // namespace beerpath
