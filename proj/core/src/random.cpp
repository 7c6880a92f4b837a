#include "beerpath/random.hpp"

#include "beerpath/error.hpp"

namespace beerpath {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) raise(Errc::bad_parameter, "empty range");
  const std::uint64_t threshold = -bound % bound;
  for (;;) {
    const std::uint64_t x = next();
    if (x >= threshold) return x % bound;
  }
}

std::string random_dyck(Rng& rng, std::size_t n) {
  // n up steps and n + 1 down steps; exactly one rotation is a Dyck path
  // followed by a final down step
  std::vector<char> steps(2 * n + 1, '1');
  for (std::size_t i = 0; i < n; ++i) steps[i] = '0';
  rng.shuffle(steps);
  long h = 0, low = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    h += steps[i] == '0' ? 1 : -1;
    if (h < low) {
      low = h;
      start = i + 1;
    }
  }
  std::string out;
  out.reserve(2 * n);
  for (std::size_t k = 0; k < 2 * n; ++k) out.push_back(steps[(start + k) % steps.size()]);
  return out;
}

std::string random_connected_dyck(Rng& rng, std::size_t n) {
  if (n == 0) raise(Errc::bad_parameter, "connected graph needs n >= 1");
  return "0" + random_dyck(rng, n - 1) + "1";
}

EndpointModel random_pairing(Rng& rng, const std::string& endpoints) {
  std::vector<Vertex> open, owners;
  Vertex v = 0;
  for (char c : endpoints) {
    if (c == '0') {
      open.push_back(++v);
    } else {
      if (open.empty()) raise(Errc::unbalanced, "endpoint string is not balanced");
      const std::size_t k = rng.below(open.size());
      owners.push_back(open[k]);
      open.erase(open.begin() + static_cast<std::ptrdiff_t>(k));
    }
  }
  return EndpointModel::parse(endpoints, owners);
}

std::vector<Vertex> random_beers(Rng& rng, std::size_t n, double p) {
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= n; ++v)
    if (rng.chance(p)) out.push_back(v);
  return out;
}

}  // namespace beerpath
