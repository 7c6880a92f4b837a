#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "beerpath/bit_vector.hpp"
#include "beerpath/ordinal_tree.hpp"
#include "beerpath/types.hpp"

namespace beerpath {

// How right endpoints are matched to open intervals while reading an
// endpoint string left to right.
enum class Pairing {
  fifo,    // i-th right endpoint closes vertex i (no nesting possible)
  nested,  // a right endpoint closes the most recently opened interval
};

// Endpoint string with '0' = left, '1' = right, and the owner of every right endpoint.
struct EndpointModel {
  std::string endpoints;
  std::vector<std::uint32_t> left, right;  // coordinates in [1, 2n], indexed by vertex (slot 0 unused)

  std::size_t n() const { return left.size() - 1; }
  std::vector<Vertex> right_owners() const;  // owner of each right endpoint in string order

  // `flip` swaps the symbols first ('1' = left convention).
  static EndpointModel parse(std::string_view s, Pairing pairing, bool flip = false);
  static EndpointModel parse(std::string_view s, std::span<const Vertex> right_owners, bool flip = false);
};

std::string flip_endpoints(std::string_view s);

// State shared by the proper and general interval graph classes: endpoint
// coordinates, adjacency, largest neighbour, components and distance trees.
class IntervalCore {
 public:
  std::size_t n() const { return model_.n(); }
  const std::string& endpoints() const { return model_.endpoints; }
  const EndpointModel& model() const { return model_; }
  std::uint32_t left(Vertex v) const;
  std::uint32_t right(Vertex v) const;
  const BitVector& endpoint_bits() const { return bits_; }  // 1 = right endpoint

  bool adjacent(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const;
  std::vector<Vertex> neighbours(Vertex v) const;
  // Largest neighbour of v; v itself when v is isolated.
  Vertex last(Vertex v) const;

  bool is_connected() const { return comp_first_.size() == 1; }
  std::size_t component_count() const { return comp_first_.size(); }
  std::size_t component_of(Vertex v) const;
  Vertex component_first(std::size_t c) const { return comp_first_[c]; }

  // Distance tree of a connected graph (node v = vertex v).
  const OrdinalTree& distance_tree() const;
  // Smallest neighbour below v, or 0 for the first vertex of a component.
  Vertex tree_parent(Vertex v) const;
  std::uint32_t depth(Vertex v) const;
  Vertex ancestor(Vertex v, std::uint32_t d) const;
  std::uint32_t post(Vertex v) const;  // post-order rank within v's component
  // Ancestors of v at depths from_depth, ..., depth(v).
  std::vector<Vertex> chain(Vertex v, std::uint32_t from_depth) const;

  std::size_t size_in_bits() const;

 protected:
  IntervalCore() = default;
  explicit IntervalCore(EndpointModel model);

  void check(Vertex v) const;

 private:
  Vertex largest_earlier_neighbour(Vertex v) const;

  EndpointModel model_;
  BitVector bits_;
  std::vector<std::vector<std::uint32_t>> rmax_;  // sparse table of right endpoints
  std::vector<Vertex> comp_first_;
  std::vector<std::uint32_t> comp_id_;
  std::vector<OrdinalTree> trees_;
};

}  // namespace beerpath
