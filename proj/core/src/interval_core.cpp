#include "beerpath/interval_core.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "beerpath/error.hpp"

namespace beerpath {

std::string flip_endpoints(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = c == '0' ? '1' : (c == '1' ? '0' : c);
  return out;
}

namespace {

std::string canonical(std::string_view s, bool flip) {
  std::string t = flip ? flip_endpoints(s) : std::string(s);
  if (t.size() % 2 != 0) raise(Errc::unbalanced, "endpoint string has odd length " + std::to_string(t.size()));
  std::int64_t open = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] != '0' && t[i] != '1') raise(Errc::parse_error, "endpoint string must contain only 0 and 1");
    open += t[i] == '0' ? 1 : -1;
    if (open < 0) raise(Errc::unbalanced, "more right than left endpoints at position " + std::to_string(i + 1));
  }
  if (open != 0) raise(Errc::unbalanced, "unmatched left endpoints");
  return t;
}

EndpointModel lefts_only(std::string t) {
  EndpointModel m;
  m.endpoints = std::move(t);
  const std::size_t n = m.endpoints.size() / 2;
  m.left.assign(n + 1, 0);
  m.right.assign(n + 1, 0);
  Vertex v = 0;
  for (std::size_t i = 0; i < m.endpoints.size(); ++i)
    if (m.endpoints[i] == '0') m.left[++v] = static_cast<std::uint32_t>(i + 1);
  return m;
}

}  // namespace

EndpointModel EndpointModel::parse(std::string_view s, Pairing pairing, bool flip) {
  EndpointModel m = lefts_only(canonical(s, flip));
  std::vector<Vertex> stack;
  Vertex opened = 0, closed = 0;
  for (std::size_t i = 0; i < m.endpoints.size(); ++i) {
    const auto pos = static_cast<std::uint32_t>(i + 1);
    if (m.endpoints[i] == '0') {
      stack.push_back(++opened);
    } else if (pairing == Pairing::fifo) {
      m.right[++closed] = pos;
    } else {
      m.right[stack.back()] = pos;
      stack.pop_back();
    }
  }
  return m;
}

EndpointModel EndpointModel::parse(std::string_view s, std::span<const Vertex> right_owners, bool flip) {
  EndpointModel m = lefts_only(canonical(s, flip));
  if (right_owners.size() != m.n())
    raise(Errc::parse_error, "expected " + std::to_string(m.n()) + " right-endpoint owners, got " +
                                 std::to_string(right_owners.size()));
  Vertex opened = 0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < m.endpoints.size(); ++i) {
    if (m.endpoints[i] == '0') {
      ++opened;
      continue;
    }
    const Vertex o = right_owners[k++];
    if (o < 1 || o > opened || m.right[o] != 0)
      raise(Errc::parse_error, "right endpoint at position " + std::to_string(i + 1) + " cannot close vertex " +
                                   std::to_string(o));
    m.right[o] = static_cast<std::uint32_t>(i + 1);
  }
  return m;
}

std::vector<Vertex> EndpointModel::right_owners() const {
  std::vector<Vertex> owners(n());
  std::iota(owners.begin(), owners.end(), Vertex{1});
  std::sort(owners.begin(), owners.end(), [&](Vertex a, Vertex b) { return right[a] < right[b]; });
  return owners;
}

IntervalCore::IntervalCore(EndpointModel model) : model_(std::move(model)) {
  const std::size_t n = model_.n();
  bits_ = BitVector::from_string(model_.endpoints);
  if (n == 0) return;

  rmax_.emplace_back(model_.right.begin(), model_.right.end());
  for (std::size_t k = 1; (std::size_t{1} << k) <= n; ++k) {
    const auto& prev = rmax_.back();
    std::vector<std::uint32_t> cur(n + 1, 0);
    for (std::size_t i = 1; i + (std::size_t{1} << k) <= n + 1; ++i)
      cur[i] = std::max(prev[i], prev[i + (std::size_t{1} << (k - 1))]);
    rmax_.push_back(std::move(cur));
  }

  comp_id_.assign(n + 1, 0);
  std::uint32_t maxr = 0;
  for (Vertex v = 1; v <= n; ++v) {
    if (v == 1 || model_.left[v] > maxr) comp_first_.push_back(v);
    comp_id_[v] = static_cast<std::uint32_t>(comp_first_.size() - 1);
    maxr = std::max(maxr, model_.right[v]);
  }
  for (std::size_t c = 0; c < comp_first_.size(); ++c) {
    const Vertex first = comp_first_[c];
    const Vertex end = c + 1 < comp_first_.size() ? comp_first_[c + 1] : static_cast<Vertex>(n + 1);
    std::vector<OrdinalTree::Node> parents(end - first, 0);
    Vertex ptr = first;
    for (Vertex v = first + 1; v < end; ++v) {
      while (model_.right[ptr] < model_.left[v]) ++ptr;
      parents[v - first] = ptr - first + 1;
    }
    trees_.push_back(OrdinalTree::from_parents(parents));
  }
}

void IntervalCore::check(Vertex v) const {
  if (v < 1 || v > n()) raise(Errc::out_of_range, "vertex " + std::to_string(v) + " not in [1, " + std::to_string(n()) + "]");
}

std::uint32_t IntervalCore::left(Vertex v) const {
  check(v);
  return model_.left[v];
}

std::uint32_t IntervalCore::right(Vertex v) const {
  check(v);
  return model_.right[v];
}

bool IntervalCore::adjacent(Vertex u, Vertex v) const {
  check(u);
  check(v);
  if (u == v) return false;
  if (u > v) std::swap(u, v);
  return model_.left[v] < model_.right[u];
}

std::size_t IntervalCore::degree(Vertex v) const { return neighbours(v).size(); }

std::vector<Vertex> IntervalCore::neighbours(Vertex v) const {
  check(v);
  std::vector<Vertex> out;
  for (Vertex u = 1; u < v; ++u)
    if (model_.right[u] > model_.left[v]) out.push_back(u);
  const auto later = static_cast<Vertex>(bits_.rank0(model_.right[v]));
  for (Vertex u = v + 1; u <= later; ++u) out.push_back(u);
  return out;
}

Vertex IntervalCore::largest_earlier_neighbour(Vertex v) const {
  auto range_max = [&](Vertex a, Vertex b) {  // inclusive, a <= b
    const unsigned k = std::bit_width(static_cast<unsigned>(b - a + 1)) - 1;
    return std::max(rmax_[k][a], rmax_[k][b - (1u << k) + 1]);
  };
  const std::uint32_t lv = model_.left[v];
  if (v == 1 || range_max(1, v - 1) < lv) return kNoVertex;
  Vertex lo = 1, hi = v - 1;
  while (lo < hi) {
    const Vertex mid = (lo + hi + 1) / 2;
    if (range_max(mid, v - 1) > lv) lo = mid; else hi = mid - 1;
  }
  return lo;
}

Vertex IntervalCore::last(Vertex v) const {
  check(v);
  const auto later = static_cast<Vertex>(bits_.rank0(model_.right[v]));
  if (later > v) return later;
  const Vertex w = largest_earlier_neighbour(v);
  return w == kNoVertex ? v : w;
}

std::size_t IntervalCore::component_of(Vertex v) const {
  check(v);
  return comp_id_[v];
}

const OrdinalTree& IntervalCore::distance_tree() const {
  if (!is_connected()) raise(Errc::disconnected, "distance tree needs a connected graph");
  return trees_.front();
}

Vertex IntervalCore::tree_parent(Vertex v) const {
  check(v);
  const Vertex first = comp_first_[comp_id_[v]];
  const auto p = trees_[comp_id_[v]].parent(v - first + 1);
  return p == 0 ? kNoVertex : p + first - 1;
}

std::uint32_t IntervalCore::depth(Vertex v) const {
  check(v);
  return trees_[comp_id_[v]].depth(v - comp_first_[comp_id_[v]] + 1);
}

Vertex IntervalCore::ancestor(Vertex v, std::uint32_t d) const {
  check(v);
  const Vertex first = comp_first_[comp_id_[v]];
  return trees_[comp_id_[v]].ancestor(v - first + 1, d) + first - 1;
}

std::uint32_t IntervalCore::post(Vertex v) const {
  check(v);
  return trees_[comp_id_[v]].post(v - comp_first_[comp_id_[v]] + 1);
}

std::vector<Vertex> IntervalCore::chain(Vertex v, std::uint32_t from_depth) const {
  std::vector<Vertex> out;
  std::uint32_t d = depth(v);
  for (; d > from_depth; --d) {
    out.push_back(v);
    v = tree_parent(v);
  }
  out.push_back(v);
  std::reverse(out.begin(), out.end());
  return out;
}

std::size_t IntervalCore::size_in_bits() const {
  std::size_t bits = bits_.size_in_bits() + 64 * model_.left.size() + 32 * comp_id_.size();
  for (const auto& r : rmax_) bits += 32 * r.size();
  for (const auto& t : trees_) bits += t.size_in_bits();
  return bits;
}

}  // namespace beerpath
