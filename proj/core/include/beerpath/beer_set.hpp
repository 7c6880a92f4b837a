#pragma once

#include <cstddef>
#include <vector>

#include "beerpath/bit_vector.hpp"
#include "beerpath/types.hpp"

namespace beerpath {

// Beer vertices as a bit vector over vertex (level-order) ranks.
class BeerSet {
 public:
  BeerSet() = default;
  // Ids must lie in [1, n]; duplicates are dropped.
  BeerSet(std::size_t n, std::vector<Vertex> beers);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return list_.size(); }
  bool empty() const { return list_.empty(); }
  const std::vector<Vertex>& list() const { return list_; }
  const BitVector& bits() const { return bits_; }

  bool contains(Vertex v) const { return bits_.access(v); }
  std::size_t rank(Vertex v) const { return bits_.rank1(v); }  // beers <= v
  Vertex select(std::size_t j) const { return static_cast<Vertex>(bits_.select1(j)); }
  Vertex next_after(Vertex v) const;   // smallest beer > v, or 0
  Vertex last_before(Vertex v) const;  // largest beer < v, or 0
  Vertex first_in(Vertex a, Vertex b) const;  // smallest beer in [a, b], or 0
  Vertex last_in(Vertex a, Vertex b) const;   // largest beer in [a, b], or 0

 private:
  std::vector<Vertex> list_;
  BitVector bits_;
};

}  // namespace beerpath
