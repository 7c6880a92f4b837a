#include "beerpath/range_index.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "beerpath/error.hpp"

namespace beerpath {

namespace {

constexpr Coord kNegInf = std::numeric_limits<Coord>::min() / 4;
constexpr Coord kPosInf = std::numeric_limits<Coord>::max() / 4;

}  // namespace

Coord Span1D::first() const {
  switch (lo.kind) {
    case Bound::Kind::unbounded: return kNegInf;
    case Bound::Kind::open: return lo.value + 1;
    case Bound::Kind::closed: return lo.value;
  }
  return kNegInf;
}

Coord Span1D::last() const {
  switch (hi.kind) {
    case Bound::Kind::unbounded: return kPosInf;
    case Bound::Kind::open: return hi.value - 1;
    case Bound::Kind::closed: return hi.value;
  }
  return kPosInf;
}

void Span1D::validate() const {
  if (lo.kind != Bound::Kind::unbounded && hi.kind != Bound::Kind::unbounded && lo.value > hi.value)
    raise(Errc::malformed_rect, "lower bound " + std::to_string(lo.value) + " exceeds upper bound " +
                                    std::to_string(hi.value));
}

WaveletMatrix::WaveletMatrix(std::span<const std::uint32_t> values, std::uint32_t sigma) : size_(values.size()) {
  bits_ = std::max(1u, static_cast<unsigned>(std::bit_width(sigma > 0 ? sigma - 1 : 0u)));
  std::vector<std::uint32_t> cur(values.begin(), values.end()), next(size_);
  for (unsigned level = 0; level < bits_; ++level) {
    const unsigned b = bits_ - 1 - level;
    std::vector<bool> bits(size_);
    std::size_t z = 0;
    for (std::size_t i = 0; i < size_; ++i) {
      bits[i] = (cur[i] >> b) & 1u;
      if (!bits[i]) ++z;
    }
    std::size_t zi = 0, oi = z;
    for (std::size_t i = 0; i < size_; ++i) (bits[i] ? next[oi++] : next[zi++]) = cur[i];
    levels_.emplace_back(bits);
    zeros_.push_back(z);
    cur.swap(next);
  }
}

std::size_t WaveletMatrix::count_less(std::size_t l, std::size_t r, std::uint32_t value) const {
  if (bits_ < 32 && value >= (std::uint32_t{1} << bits_)) return r - l;
  std::size_t res = 0;
  for (unsigned level = 0; level < bits_ && l < r; ++level) {
    const unsigned b = bits_ - 1 - level;
    const std::size_t l0 = levels_[level].rank0(l), r0 = levels_[level].rank0(r);
    if ((value >> b) & 1u) {
      res += r0 - l0;
      l = zeros_[level] + (l - l0);
      r = zeros_[level] + (r - r0);
    } else {
      l = l0;
      r = r0;
    }
  }
  return res;
}

std::size_t WaveletMatrix::count(std::size_t l, std::size_t r, std::uint32_t lo, std::uint32_t hi) const {
  if (l >= r || lo >= hi) return 0;
  return count_less(l, r, hi) - count_less(l, r, lo);
}

std::size_t WaveletMatrix::trace_up(unsigned level, std::size_t pos) const {
  while (level > 0) {
    --level;
    if (pos < zeros_[level])
      pos = levels_[level].select0(pos + 1) - 1;
    else
      pos = levels_[level].select1(pos - zeros_[level] + 1) - 1;
  }
  return pos;
}

void WaveletMatrix::report_rec(unsigned level, std::size_t l, std::size_t r, std::uint32_t prefix, std::uint32_t lo,
                               std::uint32_t hi, std::size_t limit, std::vector<std::size_t>& out) const {
  if (l >= r || out.size() >= limit) return;
  const unsigned rest = bits_ - level;
  const std::uint64_t vlo = std::uint64_t{prefix} << rest;
  const std::uint64_t vhi = (std::uint64_t{prefix} + 1) << rest;
  if (vhi <= lo || vlo >= hi) return;
  if (lo <= vlo && vhi <= hi) {
    for (std::size_t p = l; p < r && out.size() < limit; ++p) out.push_back(trace_up(level, p));
    return;
  }
  const std::size_t l0 = levels_[level].rank0(l), r0 = levels_[level].rank0(r);
  report_rec(level + 1, l0, r0, prefix << 1, lo, hi, limit, out);
  report_rec(level + 1, zeros_[level] + (l - l0), zeros_[level] + (r - r0), (prefix << 1) | 1u, lo, hi, limit, out);
}

void WaveletMatrix::report(std::size_t l, std::size_t r, std::uint32_t lo, std::uint32_t hi, std::size_t limit,
                           std::vector<std::size_t>& out) const {
  if (l >= r || lo >= hi || limit == 0) return;
  report_rec(0, l, r, 0, lo, hi, out.size() + limit, out);
}

std::size_t WaveletMatrix::size_in_bits() const {
  std::size_t bits = 64 * (2 + zeros_.size());
  for (const auto& b : levels_) bits += b.size_in_bits();
  return bits;
}

Grid2D::Grid2D(std::vector<Point2> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end(), [](const Point2& a, const Point2& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  xs_.reserve(points_.size());
  for (const auto& p : points_) {
    xs_.push_back(p.x);
    ys_.push_back(p.y);
  }
  std::sort(ys_.begin(), ys_.end());
  ys_.erase(std::unique(ys_.begin(), ys_.end()), ys_.end());
  std::vector<std::uint32_t> ranks;
  ranks.reserve(points_.size());
  for (const auto& p : points_)
    ranks.push_back(static_cast<std::uint32_t>(std::lower_bound(ys_.begin(), ys_.end(), p.y) - ys_.begin()));
  wm_ = WaveletMatrix(ranks, static_cast<std::uint32_t>(ys_.size()));
}

bool Grid2D::resolve(const Rect2& r, std::size_t& l, std::size_t& h, std::uint32_t& ylo, std::uint32_t& yhi) const {
  r.x.validate();
  r.y.validate();
  if (r.x.first() > r.x.last() || r.y.first() > r.y.last()) return false;
  l = std::lower_bound(xs_.begin(), xs_.end(), r.x.first()) - xs_.begin();
  h = std::upper_bound(xs_.begin(), xs_.end(), r.x.last()) - xs_.begin();
  ylo = static_cast<std::uint32_t>(std::lower_bound(ys_.begin(), ys_.end(), r.y.first()) - ys_.begin());
  yhi = static_cast<std::uint32_t>(std::upper_bound(ys_.begin(), ys_.end(), r.y.last()) - ys_.begin());
  return l < h && ylo < yhi;
}

std::size_t Grid2D::count(const Rect2& r) const {
  std::size_t l, h;
  std::uint32_t ylo, yhi;
  if (!resolve(r, l, h, ylo, yhi)) return 0;
  return wm_.count(l, h, ylo, yhi);
}

std::vector<Point2> Grid2D::report(const Rect2& r, std::size_t limit) const {
  std::vector<Point2> out;
  std::size_t l, h;
  std::uint32_t ylo, yhi;
  if (!resolve(r, l, h, ylo, yhi)) return out;
  std::vector<std::size_t> pos;
  wm_.report(l, h, ylo, yhi, limit, pos);
  for (auto p : pos) out.push_back(points_[p]);
  return out;
}

std::size_t Grid2D::size_in_bits() const {
  return wm_.size_in_bits() + 64 * (xs_.size() + ys_.size());
}

Grid3D::Grid3D(std::vector<Point3> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end(), [](const Point3& a, const Point3& b) { return a.x < b.x; });
  for (const auto& p : points_) {
    xs_.push_back(p.x);
    zs_.push_back(p.z);
  }
  std::sort(zs_.begin(), zs_.end());
  zs_.erase(std::unique(zs_.begin(), zs_.end()), zs_.end());
  for (const auto& p : points_)
    zrank_.push_back(static_cast<std::uint32_t>(std::lower_bound(zs_.begin(), zs_.end(), p.z) - zs_.begin()));
  if (!points_.empty()) {
    nodes_.resize(4 * points_.size());
    build(1, 0, points_.size());
  }
}

void Grid3D::build(std::size_t node, std::size_t lo, std::size_t hi) {
  Node& nd = nodes_[node];
  nd.ids.resize(hi - lo);
  std::iota(nd.ids.begin(), nd.ids.end(), static_cast<std::uint32_t>(lo));
  std::stable_sort(nd.ids.begin(), nd.ids.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return points_[a].y < points_[b].y; });
  std::vector<std::uint32_t> z;
  for (auto id : nd.ids) {
    nd.ys.push_back(points_[id].y);
    z.push_back(zrank_[id]);
  }
  nd.wm = WaveletMatrix(z, static_cast<std::uint32_t>(zs_.size()));
  if (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    build(2 * node, lo, mid);
    build(2 * node + 1, mid, hi);
  }
}

template <class Visit>
void Grid3D::visit(const Rect3& r, Visit&& f) const {
  r.x.validate();
  r.y.validate();
  r.z.validate();
  if (points_.empty() || r.x.first() > r.x.last() || r.y.first() > r.y.last() || r.z.first() > r.z.last()) return;
  const std::size_t a = std::lower_bound(xs_.begin(), xs_.end(), r.x.first()) - xs_.begin();
  const std::size_t b = std::upper_bound(xs_.begin(), xs_.end(), r.x.last()) - xs_.begin();
  const auto zlo = static_cast<std::uint32_t>(std::lower_bound(zs_.begin(), zs_.end(), r.z.first()) - zs_.begin());
  const auto zhi = static_cast<std::uint32_t>(std::upper_bound(zs_.begin(), zs_.end(), r.z.last()) - zs_.begin());
  if (a >= b || zlo >= zhi) return;
  const Coord yf = r.y.first(), yl = r.y.last();
  // returns false to stop early
  auto rec = [&](auto&& self, std::size_t node, std::size_t lo, std::size_t hi) -> bool {
    if (b <= lo || hi <= a) return true;
    if (a <= lo && hi <= b) {
      const Node& nd = nodes_[node];
      const std::size_t ya = std::lower_bound(nd.ys.begin(), nd.ys.end(), yf) - nd.ys.begin();
      const std::size_t yb = std::upper_bound(nd.ys.begin(), nd.ys.end(), yl) - nd.ys.begin();
      if (ya >= yb) return true;
      return f(nd, ya, yb, zlo, zhi);
    }
    const std::size_t mid = (lo + hi) / 2;
    return self(self, 2 * node, lo, mid) && self(self, 2 * node + 1, mid, hi);
  };
  rec(rec, 1, 0, points_.size());
}

std::size_t Grid3D::count(const Rect3& r) const {
  std::size_t total = 0;
  visit(r, [&](const Node& nd, std::size_t ya, std::size_t yb, std::uint32_t zlo, std::uint32_t zhi) {
    total += nd.wm.count(ya, yb, zlo, zhi);
    return true;
  });
  return total;
}

std::vector<Point3> Grid3D::report(const Rect3& r, std::size_t limit) const {
  std::vector<Point3> out;
  if (limit == 0) return out;
  std::vector<std::size_t> pos;
  visit(r, [&](const Node& nd, std::size_t ya, std::size_t yb, std::uint32_t zlo, std::uint32_t zhi) {
    pos.clear();
    nd.wm.report(ya, yb, zlo, zhi, limit - out.size(), pos);
    for (auto p : pos) out.push_back(points_[nd.ids[p]]);
    return out.size() < limit;
  });
  return out;
}

std::size_t Grid3D::size_in_bits() const {
  std::size_t bits = 64 * (xs_.size() + zs_.size()) + 32 * zrank_.size();
  for (const auto& nd : nodes_) bits += 64 * nd.ys.size() + 32 * nd.ids.size() + (nd.ys.empty() ? 0 : nd.wm.size_in_bits());
  return bits;
}

PredecessorSet::PredecessorSet(std::vector<Coord> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.empty()) return;
  offset_ = values.front();
  std::vector<std::uint64_t> pos;
  pos.reserve(values.size());
  for (auto v : values) pos.push_back(static_cast<std::uint64_t>(v - offset_) + 1);
  bits_ = BitVector(static_cast<std::size_t>(values.back() - offset_) + 1, pos, BitVectorMode::compressed);
}

std::optional<Coord> PredecessorSet::pred(Coord i) const {
  if (bits_.ones() == 0 || i <= offset_) return std::nullopt;
  const auto universe = static_cast<Coord>(bits_.size());
  const std::size_t c = bits_.rank1(static_cast<std::size_t>(std::min(i - offset_, universe)));
  if (c == 0) return std::nullopt;
  return static_cast<Coord>(bits_.select1(c)) + offset_ - 1;
}

}  // namespace beerpath
