#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "beerpath/bit_vector.hpp"

namespace beerpath {

using Coord = std::int64_t;

struct Bound {
  enum class Kind { unbounded, open, closed };
  Kind kind = Kind::unbounded;
  Coord value = 0;

  static Bound none() { return {}; }
  static Bound open(Coord v) { return {Kind::open, v}; }
  static Bound closed(Coord v) { return {Kind::closed, v}; }
};

// One axis of a query box; each side independently open, closed or unbounded.
struct Span1D {
  Bound lo, hi;

  static Span1D all() { return {}; }
  static Span1D open(Coord a, Coord b) { return {Bound::open(a), Bound::open(b)}; }
  static Span1D closed(Coord a, Coord b) { return {Bound::closed(a), Bound::closed(b)}; }
  static Span1D below(Coord b) { return {Bound::none(), Bound::open(b)}; }  // (-inf, b)
  static Span1D above(Coord a) { return {Bound::open(a), Bound::none()}; }  // (a, inf)

  // Integer closed form [first, last]; first > last means no integer fits.
  Coord first() const;
  Coord last() const;
  bool contains(Coord c) const { return first() <= c && c <= last(); }
  void validate() const;  // malformed-rect when raw lower > raw upper
};

struct Rect2 {
  Span1D x, y;
};

struct Rect3 {
  Span1D x, y, z;
};

struct Point2 {
  Coord x = 0, y = 0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

struct Point3 {
  Coord x = 0, y = 0, z = 0;
  friend bool operator==(const Point3&, const Point3&) = default;
};

inline bool contains(const Rect2& r, const Point2& p) { return r.x.contains(p.x) && r.y.contains(p.y); }
inline bool contains(const Rect3& r, const Point3& p) {
  return r.x.contains(p.x) && r.y.contains(p.y) && r.z.contains(p.z);
}

// Wavelet matrix over symbols in [0, sigma).
class WaveletMatrix {
 public:
  WaveletMatrix() = default;
  WaveletMatrix(std::span<const std::uint32_t> values, std::uint32_t sigma);

  std::size_t size() const { return size_; }
  // Entries in positions [l, r) with value in [lo, hi).
  std::size_t count(std::size_t l, std::size_t r, std::uint32_t lo, std::uint32_t hi) const;
  // Positions (0-based, original order) of up to `limit` such entries.
  void report(std::size_t l, std::size_t r, std::uint32_t lo, std::uint32_t hi, std::size_t limit,
              std::vector<std::size_t>& out) const;
  std::size_t size_in_bits() const;

 private:
  std::size_t count_less(std::size_t l, std::size_t r, std::uint32_t value) const;
  void report_rec(unsigned level, std::size_t l, std::size_t r, std::uint32_t prefix, std::uint32_t lo,
                  std::uint32_t hi, std::size_t limit, std::vector<std::size_t>& out) const;
  std::size_t trace_up(unsigned level, std::size_t pos) const;

  std::size_t size_ = 0;
  unsigned bits_ = 0;
  std::vector<BitVector> levels_;
  std::vector<std::size_t> zeros_;
};

// Static 2D points; emptiness/count in O(log n), reporting O(log n) per point.
class Grid2D {
 public:
  Grid2D() = default;
  explicit Grid2D(std::vector<Point2> points);

  std::size_t size() const { return points_.size(); }
  bool empty(const Rect2& r) const { return count(r) == 0; }
  std::size_t count(const Rect2& r) const;
  std::vector<Point2> report(const Rect2& r, std::size_t limit = std::numeric_limits<std::size_t>::max()) const;
  std::size_t size_in_bits() const;

 private:
  bool resolve(const Rect2& r, std::size_t& l, std::size_t& h, std::uint32_t& ylo, std::uint32_t& yhi) const;

  std::vector<Point2> points_;  // sorted by (x, y)
  std::vector<Coord> xs_;
  std::vector<Coord> ys_;       // distinct y values
  WaveletMatrix wm_;
};

// Static 3D points: segment tree on x, each node a y-sorted list with a
// wavelet matrix on z ranks. Queries O(log^2 n) plus output.
class Grid3D {
 public:
  Grid3D() = default;
  explicit Grid3D(std::vector<Point3> points);

  std::size_t size() const { return points_.size(); }
  bool empty(const Rect3& r) const { return report(r, 1).empty(); }
  std::size_t count(const Rect3& r) const;
  std::vector<Point3> report(const Rect3& r, std::size_t limit = std::numeric_limits<std::size_t>::max()) const;
  std::size_t size_in_bits() const;

 private:
  struct Node {
    std::vector<Coord> ys;
    std::vector<std::uint32_t> ids;  // into points_
    WaveletMatrix wm;
  };
  template <class Visit>
  void visit(const Rect3& r, Visit&& f) const;
  void build(std::size_t node, std::size_t lo, std::size_t hi);

  std::vector<Point3> points_;  // sorted by x
  std::vector<Coord> xs_;
  std::vector<Coord> zs_;       // distinct z values
  std::vector<std::uint32_t> zrank_;
  std::vector<Node> nodes_;
};

// Strict predecessor over a static integer set, backed by an Elias-Fano bit vector.
class PredecessorSet {
 public:
  PredecessorSet() = default;
  explicit PredecessorSet(std::vector<Coord> values);

  std::size_t size() const { return bits_.ones(); }
  std::optional<Coord> pred(Coord i) const;  // largest element < i
  std::size_t size_in_bits() const { return bits_.size_in_bits() + 64; }

 private:
  Coord offset_ = 0;
  BitVector bits_;
};

}  // namespace beerpath
