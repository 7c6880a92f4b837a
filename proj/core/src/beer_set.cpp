#include "beerpath/beer_set.hpp"

#include <algorithm>
#include <string>

#include "beerpath/error.hpp"

namespace beerpath {

BeerSet::BeerSet(std::size_t n, std::vector<Vertex> beers) : list_(std::move(beers)) {
  std::sort(list_.begin(), list_.end());
  list_.erase(std::unique(list_.begin(), list_.end()), list_.end());
  for (Vertex b : list_)
    if (b < 1 || b > n) raise(Errc::out_of_range, "beer vertex " + std::to_string(b) + " not in [1, " + std::to_string(n) + "]");
  std::vector<std::uint64_t> pos(list_.begin(), list_.end());
  bits_ = BitVector(n, pos);
}

Vertex BeerSet::next_after(Vertex v) const {
  if (v >= universe()) return kNoVertex;
  const std::size_t r = bits_.rank1(v);
  return r < size() ? select(r + 1) : kNoVertex;
}

Vertex BeerSet::last_before(Vertex v) const {
  if (v <= 1) return kNoVertex;
  const std::size_t r = bits_.rank1(std::min<std::size_t>(v - 1, universe()));
  return r > 0 ? select(r) : kNoVertex;
}

Vertex BeerSet::first_in(Vertex a, Vertex b) const {
  if (a > b || a < 1) return kNoVertex;
  const Vertex w = next_after(a - 1);
  return w != kNoVertex && w <= b ? w : kNoVertex;
}

Vertex BeerSet::last_in(Vertex a, Vertex b) const {
  if (a > b || a < 1) return kNoVertex;
  const Vertex w = last_before(b + 1);
  return w != kNoVertex && w >= a ? w : kNoVertex;
}

}  // namespace beerpath
