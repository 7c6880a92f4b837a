#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace beerpath {

enum class Traversal { level, pre, post };

// Rooted ordered tree; nodes are identified by their 1-based level-order rank.
// Node 0 is "none". Depth of the root is 0.
class OrdinalTree {
 public:
  using Node = std::uint32_t;

  OrdinalTree() = default;

  // parents[i] is the parent of node i+1; the root (node 1) has parent 0.
  // Level order requires parents[i] < i+1 and a nondecreasing parent list.
  static OrdinalTree from_parents(std::span<const Node> parents);

  std::size_t size() const { return parent_.size() - 1; }
  std::uint32_t height() const { return static_cast<std::uint32_t>(level_start_.size()) - 2; }  // max depth
  std::size_t level_size(std::uint32_t d) const;

  Node parent(Node v) const;
  std::uint32_t depth(Node v) const;
  std::uint32_t subtree_size(Node v) const;
  std::uint32_t child_count(Node v) const;
  bool is_leaf(Node v) const { return child_count(v) == 0; }
  Node first_child(Node v) const;  // 0 for a leaf
  Node last_child(Node v) const;

  std::uint32_t post(Node v) const;
  std::uint32_t pre(Node v) const;
  Node from_post(std::uint32_t p) const;
  Node from_pre(std::uint32_t p) const;
  std::uint32_t convert(std::uint32_t rank, Traversal from, Traversal to) const;

  Node ancestor(Node v, std::uint32_t d) const;  // binary lifting

  Node first_on_level(std::uint32_t d) const;
  Node last_on_level(std::uint32_t d) const;

  // Post-order interval [post(v) - size(v) + 1, post(v)] of the subtree of v.
  std::pair<std::uint32_t, std::uint32_t> subtree_post_interval(Node v) const;

  // Largest internal node w <= v in level order, 0 if none.
  Node prev_internal(Node v) const;

  std::size_t size_in_bits() const;

 private:
  void check(Node v) const;

  std::vector<Node> parent_;
  std::vector<std::uint32_t> depth_;
  std::vector<std::uint32_t> size_;
  std::vector<Node> first_child_;
  std::vector<std::uint32_t> child_count_;
  std::vector<std::uint32_t> post_, pre_;
  std::vector<Node> from_post_, from_pre_;
  std::vector<Node> level_start_;  // first node of each level, plus a sentinel
  std::vector<Node> prev_internal_;
  std::vector<std::vector<Node>> jump_;  // jump_[k][v] = 2^k-th ancestor
};

}  // namespace beerpath
