#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "beerpath/bit_vector.hpp"
#include "beerpath/interval_core.hpp"

namespace beerpath {

class ProperIntervalGraph;

// General interval graph; intervals may nest.
class IntervalGraph : public IntervalCore {
 public:
  IntervalGraph() = default;

  static IntervalGraph parse(std::string_view endpoints, Pairing pairing = Pairing::fifo, bool flip = false);
  static IntervalGraph parse(std::string_view endpoints, std::span<const Vertex> right_owners, bool flip = false);
  static IntervalGraph from_model(EndpointModel model) { return IntervalGraph(std::move(model)); }

  bool is_proper() const;
  ProperIntervalGraph to_proper() const;  // not-proper error on nesting

  Distance dist(Vertex u, Vertex v) const;
  Path shortest_path(Vertex u, Vertex v) const;  // empty when unreachable

 private:
  explicit IntervalGraph(EndpointModel model) : IntervalCore(std::move(model)) {}
};

// Ranks vertices by decreasing right endpoint (left-to-right order of the
// reflected intervals).
class MirrorMap {
 public:
  MirrorMap() = default;
  MirrorMap(const IntervalCore& g, std::span<const Vertex> beers);

  std::size_t size() const { return inverse_.size() - 1; }
  std::uint32_t mirror(Vertex v) const;
  Vertex original(std::uint32_t m) const;
  const BitVector& beer_bits() const { return beer_bits_; }  // B_R, indexed by mirror rank
  std::size_t size_in_bits() const { return beer_bits_.size_in_bits() + 64 * inverse_.size(); }

 private:
  std::vector<std::uint32_t> mirror_;
  std::vector<Vertex> inverse_;
  BitVector beer_bits_;
};

}  // namespace beerpath
