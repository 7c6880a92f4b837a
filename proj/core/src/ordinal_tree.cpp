#include "beerpath/ordinal_tree.hpp"

#include <bit>
#include <string>

#include "beerpath/error.hpp"

namespace beerpath {

OrdinalTree OrdinalTree::from_parents(std::span<const Node> parents) {
  const std::size_t n = parents.size();
  if (n == 0) raise(Errc::malformed_tree, "empty parent list");
  if (parents[0] != 0) raise(Errc::malformed_tree, "node 1 must be the root");
  for (std::size_t i = 1; i < n; ++i) {
    const Node v = static_cast<Node>(i + 1);
    if (parents[i] == 0) raise(Errc::malformed_tree, "multiple roots (node " + std::to_string(v) + ")");
    if (parents[i] >= v) raise(Errc::malformed_tree, "cycle or forward parent at node " + std::to_string(v));
    if (i >= 2 && parents[i] < parents[i - 1])
      raise(Errc::malformed_tree, "parent list is not in level order at node " + std::to_string(v));
  }

  OrdinalTree t;
  t.parent_.assign(n + 1, 0);
  t.depth_.assign(n + 1, 0);
  t.size_.assign(n + 1, 1);
  t.first_child_.assign(n + 1, 0);
  t.child_count_.assign(n + 1, 0);
  t.size_[0] = 0;
  for (Node v = 1; v <= n; ++v) {
    const Node p = parents[v - 1];
    t.parent_[v] = p;
    if (p != 0) {
      t.depth_[v] = t.depth_[p] + 1;
      if (t.first_child_[p] == 0) t.first_child_[p] = v;
      ++t.child_count_[p];
    }
  }
  for (Node v = static_cast<Node>(n); v >= 2; --v) t.size_[t.parent_[v]] += t.size_[v];

  t.pre_.assign(n + 1, 0);
  t.post_.assign(n + 1, 0);
  t.from_pre_.assign(n + 1, 0);
  t.from_post_.assign(n + 1, 0);
  t.pre_[1] = 1;
  for (Node v = 1; v <= n; ++v) {
    std::uint32_t next = t.pre_[v] + 1;
    for (Node c = t.first_child_[v]; c != 0 && c < t.first_child_[v] + t.child_count_[v]; ++c) {
      t.pre_[c] = next;
      next += t.size_[c];
    }
    t.post_[v] = t.pre_[v] - t.depth_[v] + t.size_[v] - 1;
    t.from_pre_[t.pre_[v]] = v;
    t.from_post_[t.post_[v]] = v;
  }

  const std::uint32_t height = t.depth_[n];
  t.level_start_.assign(height + 2, 0);
  for (Node v = static_cast<Node>(n); v >= 1; --v) t.level_start_[t.depth_[v]] = v;
  t.level_start_[height + 1] = static_cast<Node>(n + 1);

  t.prev_internal_.assign(n + 1, 0);
  for (Node v = 1; v <= n; ++v) t.prev_internal_[v] = t.child_count_[v] > 0 ? v : t.prev_internal_[v - 1];

  const int levels = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(height))));
  t.jump_.assign(levels, {});
  t.jump_[0] = t.parent_;
  for (int k = 1; k < levels; ++k) {
    t.jump_[k].assign(n + 1, 0);
    for (Node v = 1; v <= n; ++v) t.jump_[k][v] = t.jump_[k - 1][t.jump_[k - 1][v]];
  }
  return t;
}

void OrdinalTree::check(Node v) const {
  if (v < 1 || v > size()) raise(Errc::out_of_range, "node " + std::to_string(v));
}

std::size_t OrdinalTree::level_size(std::uint32_t d) const {
  if (d > height()) return 0;
  return level_start_[d + 1] - level_start_[d];
}

OrdinalTree::Node OrdinalTree::parent(Node v) const {
  check(v);
  return parent_[v];
}

std::uint32_t OrdinalTree::depth(Node v) const {
  check(v);
  return depth_[v];
}

std::uint32_t OrdinalTree::subtree_size(Node v) const {
  check(v);
  return size_[v];
}

std::uint32_t OrdinalTree::child_count(Node v) const {
  check(v);
  return child_count_[v];
}

OrdinalTree::Node OrdinalTree::first_child(Node v) const {
  check(v);
  return first_child_[v];
}

OrdinalTree::Node OrdinalTree::last_child(Node v) const {
  check(v);
  return child_count_[v] == 0 ? 0 : first_child_[v] + child_count_[v] - 1;
}

std::uint32_t OrdinalTree::post(Node v) const {
  check(v);
  return post_[v];
}

std::uint32_t OrdinalTree::pre(Node v) const {
  check(v);
  return pre_[v];
}

OrdinalTree::Node OrdinalTree::from_post(std::uint32_t p) const {
  check(p);
  return from_post_[p];
}

OrdinalTree::Node OrdinalTree::from_pre(std::uint32_t p) const {
  check(p);
  return from_pre_[p];
}

std::uint32_t OrdinalTree::convert(std::uint32_t rank, Traversal from, Traversal to) const {
  check(rank);
  Node v = rank;
  if (from == Traversal::pre) v = from_pre_[rank];
  if (from == Traversal::post) v = from_post_[rank];
  if (to == Traversal::pre) return pre_[v];
  if (to == Traversal::post) return post_[v];
  return v;
}

OrdinalTree::Node OrdinalTree::ancestor(Node v, std::uint32_t d) const {
  check(v);
  if (d > depth_[v])
    raise(Errc::out_of_range, "ancestor depth " + std::to_string(d) + " below node " + std::to_string(v));
  std::uint32_t up = depth_[v] - d;
  for (int k = 0; up != 0; ++k, up >>= 1)
    if (up & 1u) v = jump_[k][v];
  return v;
}

OrdinalTree::Node OrdinalTree::first_on_level(std::uint32_t d) const {
  if (d > height()) raise(Errc::not_found, "empty level " + std::to_string(d));
  return level_start_[d];
}

OrdinalTree::Node OrdinalTree::last_on_level(std::uint32_t d) const {
  if (d > height()) raise(Errc::not_found, "empty level " + std::to_string(d));
  return level_start_[d + 1] - 1;
}

std::pair<std::uint32_t, std::uint32_t> OrdinalTree::subtree_post_interval(Node v) const {
  check(v);
  return {post_[v] - size_[v] + 1, post_[v]};
}

OrdinalTree::Node OrdinalTree::prev_internal(Node v) const {
  check(v);
  return prev_internal_[v];
}

std::size_t OrdinalTree::size_in_bits() const {
  std::size_t words = parent_.size() * 10 + level_start_.size();
  for (const auto& j : jump_) words += j.size();
  return words * 32;
}

}  // namespace beerpath
