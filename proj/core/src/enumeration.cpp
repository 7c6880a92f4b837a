#include "beerpath/enumeration.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "beerpath/error.hpp"

namespace beerpath {

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt catalan(unsigned n) { return binomial(2 * n, n) / (n + 1); }

namespace {

void dyck_rec(std::string& s, unsigned n, unsigned open, unsigned closed, bool irreducible,
              const std::function<void(const std::string&)>& f) {
  if (closed == n) {
    f(s);
    return;
  }
  if (open < n) {
    s.push_back('0');
    dyck_rec(s, n, open + 1, closed, irreducible, f);
    s.pop_back();
  }
  // an irreducible path may only return to height 0 on its final step
  const unsigned height = open - closed;
  if (height > 0 && !(irreducible && height == 1 && closed + 1 < n)) {
    s.push_back('1');
    dyck_rec(s, n, open, closed + 1, irreducible, f);
    s.pop_back();
  }
}

// Parents (0 = forest root) and leaf flags of a Dyck forest, nodes in level order.
struct Forest {
  std::vector<std::uint32_t> parent;  // 1-based, slot 0 unused
  std::vector<bool> leaf;
};

Forest read_forest(std::string_view dyck) {
  const std::size_t n = dyck.size() / 2;
  // preorder ids, preorder parents, children lists
  std::vector<std::vector<std::uint32_t>> kids(n + 1);
  std::vector<std::uint32_t> stack{0};
  std::uint32_t next = 0;
  for (char c : dyck) {
    if (c == '0') {
      ++next;
      kids[stack.back()].push_back(next);
      stack.push_back(next);
    } else {
      stack.pop_back();
    }
  }
  Forest out;
  out.parent.assign(n + 1, 0);
  out.leaf.assign(n + 1, false);
  std::vector<std::uint32_t> level{0};  // preorder ids in level order
  std::vector<std::uint32_t> rank(n + 1, 0);
  for (std::size_t i = 0; i < level.size(); ++i)
    for (auto k : kids[level[i]]) {
      rank[k] = static_cast<std::uint32_t>(level.size());
      level.push_back(k);
    }
  for (std::size_t i = 1; i < level.size(); ++i) {
    const auto x = level[i];
    out.leaf[i] = kids[x].empty();
  }
  for (std::size_t x = 0; x <= n; ++x)
    for (auto k : kids[x]) out.parent[rank[k]] = rank[x];
  return out;
}

TwinClasses block(const std::vector<std::uint32_t>& parent, const std::vector<bool>& leaf) {
  TwinClasses out;
  for (Vertex v = 1; v < parent.size(); ++v) {
    if (v > 1 && leaf[v] && parent[v] == parent[v - 1])
      out.blocks.back().push_back(v);
    else
      out.blocks.push_back({v});
  }
  for (const auto& b : out.blocks) out.weight *= b.size() + 1;
  return out;
}

std::uint64_t forest_weight(std::string_view dyck) {
  const Forest f = read_forest(dyck);
  std::uint64_t w = 1, run = 0;
  for (std::size_t v = 1; v < f.parent.size(); ++v) {
    if (v > 1 && f.leaf[v] && f.parent[v] == f.parent[v - 1]) {
      ++run;
    } else {
      w *= run + 1;
      run = 1;
    }
  }
  return w * (run + 1);
}

}  // namespace

void for_each_dyck(unsigned n, bool irreducible_only, const std::function<void(const std::string&)>& f) {
  if (n > 16) raise(Errc::too_large, "Dyck enumeration needs n <= 16");
  if (irreducible_only && n == 0) return;
  std::string s;
  s.reserve(2 * n);
  dyck_rec(s, n, 0, 0, irreducible_only, f);
}

std::vector<std::string> dyck_paths(unsigned n, bool irreducible_only) {
  std::vector<std::string> out;
  for_each_dyck(n, irreducible_only, [&](const std::string& s) { out.push_back(s); });
  return out;
}

std::vector<std::uint32_t> TwinClasses::sizes() const {
  std::vector<std::uint32_t> out;
  for (const auto& b : blocks) out.push_back(static_cast<std::uint32_t>(b.size()));
  return out;
}

TwinClasses twin_blocks(const ProperIntervalGraph& g) {
  const OrdinalTree& t = g.distance_tree();
  const std::size_t n = g.n();
  std::vector<std::uint32_t> parent(n + 1, 0);
  std::vector<bool> leaf(n + 1, false);
  leaf[1] = true;  // the root's children move to the dummy root
  for (Vertex v = 2; v <= n; ++v) {
    const Vertex p = t.parent(v);
    parent[v] = p == 1 ? 0 : p;
    leaf[v] = t.is_leaf(v);
  }
  return block(parent, leaf);
}

TwinClasses forest_blocks(std::string_view dyck) {
  const Forest f = read_forest(dyck);
  return block(f.parent, f.leaf);
}

Series weighted_series(unsigned max_n) {
  Series s;
  s.cbar.assign(max_n + 1, 0);
  s.lbar.assign(max_n + 1, 0);
  s.rbar.assign(max_n + 1, 0);
  s.cbar[0] = 1;
  s.rbar[0] = 1;
  for (unsigned n = 1; n <= max_n; ++n) {
    for (unsigned l = 0; l + 1 <= n; ++l) s.lbar[n] += s.cbar[n - l - 1] * (l + 2);
    for (unsigned k = 1; k <= n; ++k) s.cbar[n] += s.lbar[k] * s.rbar[n - k];
    BigInt r = s.cbar[n];
    for (unsigned l = 1; l <= n; ++l) r -= s.rbar[n - l] * (l + 1);
    s.rbar[n] = r;
  }
  return s;
}

std::vector<BigInt> weighted_series_gf(unsigned max_n) {
  // f = 1 + (2x - x^2) f^2, so c_n = 2 [x^{n-1}] f^2 - [x^{n-2}] f^2 for n >= 1
  std::vector<BigInt> c(max_n + 1), sq(max_n + 1);
  c[0] = 1;
  for (unsigned n = 1; n <= max_n; ++n) {
    const unsigned m = n - 1;
    for (unsigned i = 0; i <= m; ++i) sq[m] += c[i] * c[m - i];
    c[n] = 2 * sq[m];
    if (n >= 2) c[n] -= sq[n - 2];
  }
  return c;
}

std::vector<BigInt> weighted_series_direct(unsigned max_n) {
  if (max_n > 14) raise(Errc::too_large, "direct weighted enumeration needs n <= 14");
  std::vector<BigInt> c(max_n + 1);
  for (unsigned n = 0; n <= max_n; ++n) {
    std::uint64_t sum = 0;
    for_each_dyck(n, false, [&](const std::string& s) { sum += forest_weight(s); });
    c[n] = sum;
  }
  return c;
}

BigFloat ratio(const BigInt& num, const BigInt& den) { return BigFloat(num) / BigFloat(den); }

BigFloat growth_constant() { return 4 + 2 * boost::multiprecision::sqrt(BigFloat(3)); }

namespace {

std::vector<std::uint32_t> runs(std::string_view s, char c) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == c) {
      if (i == 0 || s[i - 1] != c) out.push_back(0);
      ++out.back();
    }
  return out;
}

// Gaps 1..n-1 that do not fall on a boundary of the given block sizes.
std::vector<std::uint32_t> unbarred(std::uint32_t n, const std::vector<std::uint32_t>& blocks) {
  std::vector<bool> barrier(n + 1, false);
  std::uint32_t acc = 0;
  for (std::size_t j = 0; j + 1 < blocks.size(); ++j) barrier[acc += blocks[j]] = true;
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 1; i < n; ++i)
    if (!barrier[i]) out.push_back(i);
  return out;
}

std::vector<std::uint32_t> block_sizes(std::uint32_t n, const std::vector<std::uint32_t>& free_gaps) {
  std::vector<std::uint32_t> out{1};
  std::size_t j = 0;
  for (std::uint32_t i = 1; i < n; ++i) {
    if (j < free_gaps.size() && free_gaps[j] == i) {
      ++j;
      ++out.back();
    } else {
      out.push_back(1);
    }
  }
  return out;
}

}  // namespace

std::string CompositionRepr::endpoints() const {
  const auto a = block_sizes(n, r_left), b = block_sizes(n, r_right);
  std::string s;
  for (std::size_t j = 0; j < a.size(); ++j) {
    s.append(a[j], '0');
    s.append(b[j], '1');
  }
  return s;
}

CompositionRepr composition_from_endpoints(std::string_view raw, bool flip) {
  const std::string s = flip ? flip_endpoints(raw) : std::string(raw);
  const EndpointModel model = EndpointModel::parse(s, Pairing::fifo);
  CompositionRepr c;
  c.n = static_cast<std::uint32_t>(model.n());
  if (c.n == 0) return c;
  const auto a = runs(s, '0'), b = runs(s, '1');
  c.r_left = unbarred(c.n, a);
  c.r_right = unbarred(c.n, b);
  std::set_intersection(c.r_left.begin(), c.r_left.end(), c.r_right.begin(), c.r_right.end(),
                        std::back_inserter(c.r_both));
  // block index of each vertex's left and right endpoint
  std::vector<std::uint32_t> lb(c.n + 1), rb(c.n + 1);
  for (std::uint32_t v = 1, j = 0, used = 0; v <= c.n; ++v, ++used) {
    if (used == a[j]) ++j, used = 0;
    lb[v] = j;
  }
  for (std::uint32_t v = 1, j = 0, used = 0; v <= c.n; ++v, ++used) {
    if (used == b[j]) ++j, used = 0;
    rb[v] = j;
  }
  for (std::uint32_t j = 0; j < a.size(); ++j) {
    Vertex lo = 0, hi = 0;
    for (Vertex v = 1; v <= c.n; ++v)
      if (lb[v] <= j && j <= rb[v]) {
        if (!lo) lo = v;
        hi = v;
      }
    c.cliques.emplace_back(lo, hi);
  }
  std::vector<Vertex> cls{1};
  auto close = [&] {
    c.weight *= cls.size() + 1;
    if (cls.size() >= 2) c.twins.push_back(cls);
  };
  for (Vertex v = 2; v <= c.n; ++v) {
    if (std::binary_search(c.r_both.begin(), c.r_both.end(), v - 1)) {
      cls.push_back(v);
    } else {
      close();
      cls = {v};
    }
  }
  close();
  return c;
}

CompositionRepr composition_from_sets(std::uint32_t n, std::vector<std::uint32_t> r_left,
                                      std::vector<std::uint32_t> r_right) {
  for (auto* set : {&r_left, &r_right}) {
    std::sort(set->begin(), set->end());
    set->erase(std::unique(set->begin(), set->end()), set->end());
    for (auto g : *set)
      if (g < 1 || g >= n) raise(Errc::bad_parameter, "gap " + std::to_string(g) + " not in [1, n-1]");
  }
  std::size_t li = 0, ri = 0;
  for (std::uint32_t i = 1; i <= n; ++i) {
    while (li < r_left.size() && r_left[li] < i) ++li;
    while (ri < r_right.size() && r_right[ri] < i) ++ri;
    if (li < ri) raise(Errc::dyck_violation, "more right gaps than left gaps before vertex " + std::to_string(i));
  }
  if (r_left.size() != r_right.size()) raise(Errc::dyck_violation, "R_l and R_r differ in size");
  CompositionRepr c;
  c.n = n;
  c.r_left = std::move(r_left);
  c.r_right = std::move(r_right);
  return composition_from_endpoints(c.endpoints());
}

BigInt catalan_identity_rhs(unsigned n) {
  BigInt sum = 0;
  for (unsigned x = 0; x <= n; ++x)
    for (unsigned y = 0; 2 * y <= n - x; ++y) sum += binomial(n, x) * binomial(n - x, 2 * y) * catalan(y);
  return sum;
}

BigInt sxy_formula(unsigned n, unsigned x, unsigned y) {
  if (x + 2 * y > n) return 0;
  return binomial(n, x) * binomial(n - x, 2 * y) * binomial(2 * y, y) / (y + 1);
}

namespace {

// Calls f(L, R) for every gap-mask pair with |L| = |R| satisfying the prefix condition.
template <class F>
void for_each_gap_pair(unsigned n, F&& f) {
  if (n > 12) raise(Errc::too_large, "gap-pair enumeration needs n <= 12");
  const std::uint32_t full = 1u << n;
  for (std::uint32_t l = 0; l < full; ++l)
    for (std::uint32_t r = 0; r < full; ++r) {
      if (std::popcount(l) != std::popcount(r)) continue;
      bool ok = true;
      for (unsigned i = 1; i <= n && ok; ++i) {
        const std::uint32_t below = (1u << i) - 1;  // gaps 1..i
        ok = std::popcount(l & below) >= std::popcount(r & below);
      }
      if (ok) f(l, r);
    }
}

}  // namespace

std::vector<std::vector<std::uint64_t>> sxy_enumerated(unsigned n) {
  std::vector<std::vector<std::uint64_t>> t(n + 1, std::vector<std::uint64_t>(n / 2 + 1, 0));
  for_each_gap_pair(n, [&](std::uint32_t l, std::uint32_t r) {
    const unsigned x = std::popcount(l & r);
    const unsigned y = std::popcount(l) - x;
    ++t[x][y];
  });
  return t;
}

namespace {

void h_rec(unsigned s, std::uint64_t p, unsigned k_max, std::vector<std::uint64_t>& h) {
  h[s] += p;
  for (unsigned part = 1; s + part < k_max; ++part) h_rec(s + part, p * (part + 1), k_max, h);
  if (s < k_max) h[k_max] += p * (k_max - s + 1);  // last part fills up to k_max
}

}  // namespace

std::vector<std::uint64_t> h_enumerated(unsigned k_max) {
  if (k_max > 32) raise(Errc::too_large, "composition enumeration needs k <= 32");
  std::vector<std::uint64_t> h(k_max + 1, 0);
  if (k_max == 0) {
    h[0] = 1;
    return h;
  }
  h_rec(0, 1, k_max, h);
  return h;
}

std::vector<BigInt> h_recurrence(unsigned k_max) {
  std::vector<BigInt> h(std::max(k_max + 1, 3u));
  h[0] = 1;
  h[1] = 2;
  h[2] = 7;
  for (unsigned k = 3; k <= k_max; ++k) h[k] = 4 * h[k - 1] - 2 * h[k - 2];
  h.resize(k_max + 1);
  return h;
}

BigInt h_closed_form(unsigned k) {
  if (k == 0) raise(Errc::bad_parameter, "closed form holds for k >= 1");
  const BigFloat s = boost::multiprecision::sqrt(BigFloat(2));
  const BigFloat v = (boost::multiprecision::pow(2 + s, k + 1) - boost::multiprecision::pow(2 - s, k + 1)) / (4 * s);
  return static_cast<BigInt>(boost::multiprecision::round(v));
}

std::vector<BigInt> census(unsigned max_n) {
  const unsigned deg = max_n + 1;
  const auto h = h_recurrence(deg);
  std::vector<BigInt> hx(deg + 1, 0);
  for (unsigned k = 1; k <= deg; ++k) hx[k] = h[k];
  auto mul = [&](const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> c(deg + 1, 0);
    for (unsigned i = 0; i <= deg; ++i)
      if (a[i] != 0)
        for (unsigned j = 0; i + j <= deg; ++j) c[i + j] += a[i] * b[j];
    return c;
  };
  const auto h2 = mul(hx, hx);
  std::vector<BigInt> out(max_n + 1, 0);
  auto power = hx;  // H^{2y+1}
  for (unsigned y = 0; 2 * y <= max_n; ++y) {
    for (unsigned n = 2 * y; n <= max_n; ++n) out[n] += catalan(y) * power[n + 1];
    power = mul(power, h2);
  }
  return out;
}

std::vector<FnxRow> fnx_table(unsigned n) {
  std::vector<BigInt> sum(n + 1, 0);
  std::vector<std::uint64_t> count(n + 1, 0);
  for_each_gap_pair(n, [&](std::uint32_t l, std::uint32_t r) {
    const std::uint32_t both = l & r;
    std::uint64_t g = 1, run = 1;
    for (unsigned i = 1; i <= n; ++i) {
      if (both >> (i - 1) & 1u) {
        ++run;
      } else {
        g *= run + 1;
        run = 1;
      }
    }
    g *= run + 1;
    const unsigned x = std::popcount(both);
    sum[x] += g;
    ++count[x];
  });
  std::vector<FnxRow> rows;
  for (unsigned x = 0; x <= n; ++x) {
    if (!count[x]) continue;
    FnxRow row;
    row.n = n;
    row.x = x;
    row.pairs = count[x];
    row.mean = BigRational(sum[x], count[x]);
    const BigInt two_n = BigInt(1) << n;
    row.lower = BigRational(two_n, BigInt(1) << x);
    row.upper = BigRational(two_n * boost::multiprecision::pow(BigInt(3), x), BigInt(1) << (2 * x));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace beerpath
