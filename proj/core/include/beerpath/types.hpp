#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <vector>

#include "beerpath/error.hpp"

namespace beerpath {

// Vertices are 1-based; 0 means "no vertex".
using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = 0;

using Path = std::vector<Vertex>;

// Path length with a distinguished infinity (unreachable).
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(std::uint32_t v) : finite_(true), value_(v) {}

  static constexpr Distance infinite() { return Distance(); }

  constexpr bool is_finite() const { return finite_; }
  constexpr bool is_infinite() const { return !finite_; }

  std::uint32_t value() const {
    if (!finite_) raise(Errc::out_of_range, "value() of an infinite distance");
    return value_;
  }

  friend constexpr Distance operator+(Distance a, Distance b) {
    if (!a.finite_ || !b.finite_) return Distance();
    return Distance(a.value_ + b.value_);
  }

  friend constexpr bool operator==(Distance a, Distance b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }

  friend constexpr std::strong_ordering operator<=>(Distance a, Distance b) {
    if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (!a.finite_) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, Distance d) {
    if (d.finite_) return os << d.value_;
    return os << "inf";
  }

 private:
  bool finite_ = false;
  std::uint32_t value_ = 0;
};

}  // namespace beerpath
