#include "beerpath/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "beerpath/error.hpp"

namespace beerpath::oracle {

AdjacencyList AdjacencyList::from_graph(const IntervalCore& g) {
  const std::size_t n = g.n();
  AdjacencyList out;
  out.adj.assign(n + 1, {});
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = 1; v <= n; ++v)
      if (u != v && g.left(u) < g.right(v) && g.left(v) < g.right(u)) out.adj[u].push_back(v);
  return out;
}

AdjacencyList AdjacencyList::from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  AdjacencyList out;
  out.adj.assign(n + 1, {});
  for (auto [u, v] : edges) {
    if (u == v) continue;
    out.adj[u].push_back(v);
    out.adj[v].push_back(u);
  }
  for (auto& a : out.adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return out;
}

bool AdjacencyList::adjacent(Vertex u, Vertex v) const {
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::vector<Distance> bfs(const AdjacencyList& g, Vertex s) {
  std::vector<Distance> d(g.n() + 1);
  std::deque<Vertex> q{s};
  d[s] = Distance(0);
  while (!q.empty()) {
    const Vertex x = q.front();
    q.pop_front();
    for (Vertex y : g.adj[x])
      if (!d[y].is_finite()) {
        d[y] = d[x] + Distance(1);
        q.push_back(y);
      }
  }
  return d;
}

Distance dist(const AdjacencyList& g, Vertex u, Vertex v) { return bfs(g, u)[v]; }

DistanceTable::DistanceTable(const AdjacencyList& g) : rows_(g.n() + 1) {
  for (Vertex s = 1; s <= g.n(); ++s) rows_[s] = bfs(g, s);
}

Distance beer_dist(const DistanceTable& d, const std::vector<Vertex>& beers, Vertex u, Vertex v) {
  Distance best = Distance::infinite();
  for (Vertex b : beers) best = std::min(best, d(u, b) + d(b, v));
  return best;
}

Distance beer_dist(const AdjacencyList& g, const std::vector<Vertex>& beers, Vertex u, Vertex v) {
  const auto du = bfs(g, u), dv = bfs(g, v);
  Distance best = Distance::infinite();
  for (Vertex b : beers) best = std::min(best, du[b] + dv[b]);
  return best;
}

std::uint32_t classify(const DistanceTable& d, Vertex u, Vertex w, Vertex v) {
  return d(u, w).value() + d(w, v).value() - d(u, v).value();
}

std::optional<std::string> validate_path(const AdjacencyList& g, const std::vector<Vertex>& beers, const Path& path,
                                         Vertex u, Vertex v, std::uint32_t expected_length) {
  if (path.empty()) return "empty path";
  if (path.front() != u) return "path does not start at " + std::to_string(u);
  if (path.back() != v) return "path does not end at " + std::to_string(v);
  for (Vertex x : path)
    if (x < 1 || x > g.n()) return "vertex " + std::to_string(x) + " out of range";
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!g.adjacent(path[i], path[i + 1]))
      return "no edge " + std::to_string(path[i]) + "-" + std::to_string(path[i + 1]);
  const bool has_beer = std::any_of(path.begin(), path.end(), [&](Vertex x) {
    return std::find(beers.begin(), beers.end(), x) != beers.end();
  });
  if (!has_beer) return "no beer vertex";
  if (path.size() - 1 != expected_length)
    return "length " + std::to_string(path.size() - 1) + ", expected " + std::to_string(expected_length);
  return std::nullopt;
}

namespace {

template <class F>
void for_each_automorphism(const AdjacencyList& g, F&& f) {
  const std::size_t n = g.n();
  if (n > 8) raise(Errc::too_large, "automorphism enumeration needs n <= 8");
  std::vector<Vertex> p(n + 1);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (Vertex u = 1; u <= n && ok; ++u)
      for (Vertex v : g.adj[u])
        if (!g.adjacent(p[u], p[v])) {
          ok = false;
          break;
        }
    if (ok) f(p);
  } while (std::next_permutation(p.begin() + 1, p.end()));
}

}  // namespace

std::uint64_t orbit_count(const AdjacencyList& g) {
  const std::size_t n = g.n();
  std::uint64_t total = 0, group = 0;
  for_each_automorphism(g, [&](const std::vector<Vertex>& p) {
    std::vector<bool> seen(n + 1);
    unsigned cycles = 0;
    for (Vertex s = 1; s <= n; ++s) {
      if (seen[s]) continue;
      ++cycles;
      for (Vertex x = s; !seen[x]; x = p[x]) seen[x] = true;
    }
    total += std::uint64_t{1} << cycles;
    ++group;
  });
  return total / group;
}

std::uint64_t automorphism_count(const AdjacencyList& g) {
  std::uint64_t group = 0;
  for_each_automorphism(g, [&](const std::vector<Vertex>&) { ++group; });
  return group;
}

std::vector<std::pair<Vertex, Vertex>> maximal_cliques(const IntervalCore& g) {
  const std::size_t n = g.n();
  std::vector<std::vector<Vertex>> sets;
  for (std::uint32_t p = 1; p <= 2 * n; ++p) {
    std::vector<Vertex> c;
    for (Vertex v = 1; v <= n; ++v)
      if (g.left(v) <= p && p <= g.right(v)) c.push_back(v);
    if (!c.empty() && (sets.empty() || sets.back() != c)) sets.push_back(std::move(c));
  }
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < sets.size() && maximal; ++j)
      if (i != j && sets[j].size() > sets[i].size() &&
          std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end()))
        maximal = false;
    if (maximal) out.emplace_back(sets[i].front(), sets[i].back());
  }
  return out;
}

bool clique_symmetric(const IntervalCore& g) {
  const auto n = static_cast<Vertex>(g.n());
  auto cliques = maximal_cliques(g);
  auto reflected = cliques;
  for (auto& [a, b] : reflected) std::tie(a, b) = std::pair<Vertex, Vertex>(n + 1 - b, n + 1 - a);
  std::sort(cliques.begin(), cliques.end());
  std::sort(reflected.begin(), reflected.end());
  return cliques == reflected;
}

}  // namespace beerpath::oracle
