#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "beerpath/interval.hpp"
#include "beerpath/proper_interval.hpp"
#include "beerpath/random.hpp"

namespace beerpath::test {

inline constexpr std::string_view kG15 = "000001000101001110011011011111";
inline constexpr std::string_view kStar = "00101011";  // nested pairing

inline ProperIntervalGraph g15() { return ProperIntervalGraph::parse(kG15); }
inline IntervalGraph star() { return IntervalGraph::parse(kStar, Pairing::nested); }

// Every way to assign right endpoints to open intervals.
inline void for_each_pairing(const std::string& s, const std::function<void(const std::vector<Vertex>&)>& f) {
  std::vector<Vertex> owners, open;
  std::function<void(std::size_t, Vertex)> rec = [&](std::size_t i, Vertex opened) {
    if (i == s.size()) {
      f(owners);
      return;
    }
    if (s[i] == '0') {
      open.push_back(opened + 1);
      rec(i + 1, opened + 1);
      open.pop_back();
      return;
    }
    for (std::size_t k = 0; k < open.size(); ++k) {
      const Vertex o = open[k];
      open.erase(open.begin() + static_cast<std::ptrdiff_t>(k));
      owners.push_back(o);
      rec(i + 1, opened);
      owners.pop_back();
      open.insert(open.begin() + static_cast<std::ptrdiff_t>(k), o);
    }
  };
  rec(0, 0);
}

inline std::vector<Vertex> subset(std::uint32_t mask) {
  std::vector<Vertex> out;
  for (Vertex v = 1; mask; ++v, mask >>= 1)
    if (mask & 1u) out.push_back(v);
  return out;
}

// Components split where the string returns to zero, whatever the pairing.
inline IntervalGraph random_interval_graph(Rng& rng, std::size_t n, bool connected = true) {
  return IntervalGraph::from_model(random_pairing(rng, connected ? random_connected_dyck(rng, n) : random_dyck(rng, n)));
}

inline std::vector<Vertex> random_nonempty_beers(Rng& rng, std::size_t n) {
  auto b = random_beers(rng, n, rng.unit());
  if (b.empty()) b.push_back(static_cast<Vertex>(rng.between(1, n)));
  return b;
}

}  // namespace beerpath::test
