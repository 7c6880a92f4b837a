#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "beerpath/interval_core.hpp"

namespace beerpath {

// mt19937_64 with bounded draws done by rejection, so a seed yields the same
// stream on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound), bound > 0
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }  // inclusive
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

// Uniform Dyck path of semilength n via the cycle lemma ('0' = up).
std::string random_dyck(Rng& rng, std::size_t n);
// Uniform irreducible Dyck path (a connected graph), n >= 1.
std::string random_connected_dyck(Rng& rng, std::size_t n);
// Each right endpoint closes a uniformly chosen open interval.
EndpointModel random_pairing(Rng& rng, const std::string& endpoints);
// Each vertex independently with probability p.
std::vector<Vertex> random_beers(Rng& rng, std::size_t n, double p);

}  // namespace beerpath
