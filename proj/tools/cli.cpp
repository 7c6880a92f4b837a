#include "cli.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "beerpath/beer_interval.hpp"
#include "beerpath/beer_proper.hpp"
#include "beerpath/enumeration.hpp"
#include "beerpath/error.hpp"
#include "beerpath/oracle.hpp"
#include "beerpath/random.hpp"

namespace beerpath::cli {

using Json = nlohmann::ordered_json;

namespace {

const std::map<std::string, GraphKind> kKinds{{"proper", GraphKind::proper}, {"interval", GraphKind::interval}};

Json path_json(const Path& p) { return Json(std::vector<Vertex>(p.begin(), p.end())); }

Json distance_json(Distance d) { return d.is_finite() ? Json(d.value()) : Json(nullptr); }

std::string str(const BigFloat& x, int digits = 8) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

std::string str(const BigRational& x, int digits = 6) { return str(BigFloat(x), digits); }

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  GraphKind kind = GraphKind::proper;
  std::size_t n = 0;
  double density = 0.2;
  std::uint64_t seed = 0;
  std::string out;
  bool allow_disconnected = false;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  Rng rng(a.seed);
  const std::string s = a.allow_disconnected ? random_dyck(rng, a.n) : random_connected_dyck(rng, a.n);
  const EndpointModel m = a.kind == GraphKind::proper ? EndpointModel::parse(s, Pairing::fifo) : random_pairing(rng, s);
  const GraphFile f = GraphFile::from_model(a.kind, m, random_beers(rng, a.n, a.density));
  if (a.out.empty() || a.out == "-")
    out << f.emit();
  else
    f.save(a.out);
  return ok;
}

// ---------------------------------------------------------------- query

struct QueryArgs {
  std::string graph, op;
  Vertex u = 0, v = 0;
  bool compact = false;
  std::uint32_t delta = 0;  // 0: ceil(log2 n), at least 2
};

int cmd_query(const QueryArgs& a, std::ostream& out) {
  const GraphFile f = GraphFile::load(a.graph);
  Json rec;
  rec["op"] = a.op;
  rec["u"] = a.u;
  rec["v"] = a.v;
  const bool beer_op = a.op == "beer_dist" || a.op == "beer_shortest_path";
  if (a.compact && f.kind != GraphKind::proper) raise(Errc::bad_parameter, "--compact needs a proper graph");
  if (f.kind == GraphKind::proper) {
    const ProperIntervalGraph g = f.proper_graph();
    if (!beer_op) {
      rec["result"] = a.op == "dist" ? distance_json(g.dist(a.u, a.v)) : path_json(g.shortest_path(a.u, a.v));
    } else if (a.compact) {
      const std::uint32_t delta =
          a.delta ? a.delta : std::max<std::uint32_t>(2, static_cast<std::uint32_t>(std::bit_width(g.n() - 1)));
      const CompactBeerIndex idx(g, f.beer_set(), delta);
      rec["result"] = a.op == "beer_dist" ? Json(idx.beer_dist(a.u, a.v)) : path_json(idx.beer_path(a.u, a.v));
    } else {
      const ProperBeerIndex idx(g, f.beer_set());
      rec["result"] = a.op == "beer_dist" ? Json(idx.beer_dist(a.u, a.v)) : path_json(idx.beer_path(a.u, a.v));
    }
  } else {
    const IntervalGraph g = f.interval_graph();
    if (!beer_op) {
      rec["result"] = a.op == "dist" ? distance_json(g.dist(a.u, a.v)) : path_json(g.shortest_path(a.u, a.v));
    } else {
      const IntervalBeerIndex idx(g, f.beer_set());
      rec["result"] = a.op == "beer_dist" ? Json(idx.beer_dist(a.u, a.v)) : path_json(idx.beer_path(a.u, a.v));
    }
  }
  out << rec.dump() << '\n';
  return ok;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  GraphKind kind = GraphKind::proper;
  std::size_t n = 50;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  std::vector<std::uint32_t> deltas;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto deltas = a.deltas.empty() ? standard_deltas(a.n) : a.deltas;
  std::uint64_t failures = 0;
  std::optional<std::uint64_t> first;
  std::string first_reason;
  for (std::uint64_t i = 0; i < a.trials; ++i) {
    const auto why = check_instance(make_instance(a.kind, a.n, a.seed + i), deltas);
    if (!why) continue;
    ++failures;
    if (!first) first = a.seed + i, first_reason = *why;
  }
  Json summary;
  summary["kind"] = kind_name(a.kind);
  summary["n"] = a.n;
  summary["trials"] = a.trials;
  summary["seed"] = a.seed;
  summary["deltas"] = deltas;
  summary["failures"] = failures;
  summary["result"] = failures == 0 ? "pass" : "fail";
  out << summary.dump() << '\n';
  if (!first) return ok;

  // shrink: halve n under the same seed while the instance still fails
  std::size_t n = a.n;
  std::string reason = first_reason;
  for (std::size_t m = a.n / 2; m >= 1; m /= 2) {
    const auto why = check_instance(make_instance(a.kind, m, *first), deltas);
    if (!why) break;
    n = m;
    reason = *why;
  }
  const Instance inst = make_instance(a.kind, n, *first);
  out << "# first failure: seed " << *first << ", n " << n << ", query " << inst.u << ' ' << inst.v << ": " << reason
      << '\n'
      << inst.file.emit();
  return failed;
}

// ---------------------------------------------------------------- count

int cmd_count(const std::string& series, unsigned max_n, std::ostream& out) {
  if (series == "cbar") {
    const Series s = weighted_series(max_n + 1);
    const auto gf = weighted_series_gf(max_n + 1);
    const auto direct = weighted_series_direct(std::min(max_n, 14u));
    out << "n,direct,recurrence,gf,agree,ratio,reference\n";
    for (unsigned n = 0; n <= max_n; ++n) {
      const bool have = n < direct.size();
      const bool agree = s.cbar[n] == gf[n] && (!have || direct[n] == s.cbar[n]);
      out << n << ',' << (have ? direct[n].str() : "") << ',' << s.cbar[n] << ',' << gf[n] << ','
          << (agree ? "yes" : "no") << ',' << str(ratio(s.cbar[n + 1], s.cbar[n])) << ',' << str(growth_constant())
          << '\n';
    }
  } else if (series == "h") {
    if (max_n > 32) raise(Errc::too_large, "h series needs --max-n <= 32");
    const auto e = h_enumerated(max_n);
    const auto r = h_recurrence(max_n + 1);
    const BigFloat ref = 2 + boost::multiprecision::sqrt(BigFloat(2));
    out << "k,enumerated,recurrence,closed_form,agree,ratio,reference\n";
    for (unsigned k = 1; k <= max_n; ++k) {
      const BigInt c = h_closed_form(k);
      const bool agree = BigInt(e[k]) == r[k] && r[k] == c;
      out << k << ',' << e[k] << ',' << r[k] << ',' << c << ',' << (agree ? "yes" : "no") << ','
          << str(ratio(r[k + 1], r[k]), 10) << ',' << str(ref, 10) << '\n';
    }
  } else if (series == "catalan-identity") {
    if (max_n > 20) raise(Errc::too_large, "catalan-identity needs --max-n <= 20");
    out << "n,catalan_n_plus_1,sum,pass\n";
    for (unsigned n = 0; n <= max_n; ++n) {
      const BigInt c = catalan(n + 1), s = catalan_identity_rhs(n);
      out << n << ',' << c << ',' << s << ',' << (c == s ? "pass" : "fail") << '\n';
    }
  } else if (series == "sxy") {
    if (max_n > 12) raise(Errc::too_large, "sxy needs --max-n <= 12");
    out << "n,x,y,formula,enumerated,pass\n";
    for (unsigned n = 0; n <= max_n; ++n) {
      const auto t = sxy_enumerated(n);
      for (unsigned x = 0; x <= n; ++x)
        for (unsigned y = 0; x + 2 * y <= n; ++y) {
          const BigInt f = sxy_formula(n, x, y);
          out << n << ',' << x << ',' << y << ',' << f << ',' << t[x][y] << ',' << (f == t[x][y] ? "pass" : "fail")
              << '\n';
        }
    }
  } else if (series == "bounds") {
    const auto a = census(max_n);
    const Series s = weighted_series(max_n + 1);
    const BigFloat seven = 7, improved = 6 + boost::multiprecision::sqrt(BigFloat(2)), upper = BigFloat(15) / 2;
    out << "n,census,cbar_n_plus_1,ratio,log2_per_n,log2_7,log2_6_plus_sqrt2,log2_15_over_2,log2_4_plus_2sqrt3\n";
    for (unsigned n = 1; n <= max_n; ++n) {
      const BigFloat lg = boost::multiprecision::log2(BigFloat(a[n])) / n;
      out << n << ',' << a[n] << ',' << s.cbar[n + 1] << ',' << str(ratio(a[n], a[n - 1])) << ',' << str(lg) << ','
          << str(boost::multiprecision::log2(seven)) << ',' << str(boost::multiprecision::log2(improved)) << ','
          << str(boost::multiprecision::log2(upper)) << ',' << str(boost::multiprecision::log2(growth_constant()))
          << '\n';
    }
  } else if (series == "fnx") {
    if (max_n > 12) raise(Errc::too_large, "fnx needs --max-n <= 12");
    out << "n,x,pairs,mean,lower,upper\n";
    for (const auto& r : fnx_table(max_n))
      out << r.n << ',' << r.x << ',' << r.pairs << ',' << str(r.mean) << ',' << str(r.lower) << ',' << str(r.upper)
          << '\n';
  } else {
    raise(Errc::bad_parameter, "unknown series '" + series + "'");
  }
  return ok;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::string graph;
  std::size_t n = 1 << 16;
  std::size_t queries = 10000;
  std::uint64_t seed = 0;
  std::vector<std::uint32_t> deltas;
};

template <class F>
Json time_queries(const std::vector<std::pair<Vertex, Vertex>>& qs, F&& f) {
  using Clock = std::chrono::steady_clock;
  std::vector<double> ns;
  ns.reserve(qs.size());
  std::uint64_t sink = 0;
  for (auto [u, v] : qs) {
    const auto t0 = Clock::now();
    sink += f(u, v);
    ns.push_back(std::chrono::duration<double, std::nano>(Clock::now() - t0).count());
  }
  Json j;
  if (ns.empty()) return j;
  std::sort(ns.begin(), ns.end());
  auto pct = [&](double p) { return ns[std::min(ns.size() - 1, static_cast<std::size_t>(p * ns.size()))]; };
  j["p50_ns"] = pct(0.5);
  j["p90_ns"] = pct(0.9);
  j["p99_ns"] = pct(0.99);
  j["checksum"] = sink;
  return j;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  Rng rng(a.seed);
  GraphFile f;
  if (!a.graph.empty()) {
    f = GraphFile::load(a.graph);
  } else {
    const std::string s = random_connected_dyck(rng, a.n);
    f = GraphFile::from_model(GraphKind::proper, EndpointModel::parse(s, Pairing::fifo), random_beers(rng, a.n, 0.1));
  }
  if (!f.beer || f.beer->empty()) f.beer = std::vector<Vertex>{static_cast<Vertex>(rng.between(1, f.n()))};
  const std::size_t n = f.n();
  std::vector<std::pair<Vertex, Vertex>> qs;
  for (std::size_t i = 0; i < a.queries; ++i)
    qs.emplace_back(static_cast<Vertex>(rng.between(1, n)), static_cast<Vertex>(rng.between(1, n)));

  auto emit = [&](Json j) { out << j.dump() << '\n'; };
  auto t0 = std::chrono::steady_clock::now();
  if (f.kind == GraphKind::interval) {
    const IntervalGraph g = f.interval_graph();
    const IntervalBeerIndex idx(g, f.beer_set());
    Json j{{"structure", "interval"}, {"n", n}, {"beers", f.beer->size()}, {"build_s", seconds_since(t0)}};
    j["graph_bits"] = g.size_in_bits();
    j["index_bits"] = idx.size_in_bits();
    j["bits_per_vertex"] = static_cast<double>(g.size_in_bits() + idx.size_in_bits()) / n;
    j["beer_dist"] = time_queries(qs, [&](Vertex u, Vertex v) { return idx.beer_dist(u, v); });
    emit(j);
    return ok;
  }
  const ProperIntervalGraph g = f.proper_graph();
  const BeerSet beers = f.beer_set();
  const ProperBeerIndex basic(g, beers);
  Json j{{"structure", "basic"}, {"n", n}, {"beers", beers.size()}, {"build_s", seconds_since(t0)}};
  j["graph_bits"] = g.size_in_bits();
  j["beer_bits"] = beers.bits().size_in_bits();
  j["grid_bits"] = basic.grid().size_in_bits();
  j["bits_per_vertex"] = static_cast<double>(g.size_in_bits() + basic.size_in_bits()) / n;
  j["beer_dist"] = time_queries(qs, [&](Vertex u, Vertex v) { return basic.beer_dist(u, v); });
  emit(j);
  for (std::uint32_t delta : a.deltas.empty() ? std::vector<std::uint32_t>{2, 4, 8, 16} : a.deltas) {
    t0 = std::chrono::steady_clock::now();
    const CompactBeerIndex c(g, beers, delta);
    const auto sp = c.space();
    Json k{{"structure", "compact"}, {"n", n}, {"delta", delta}, {"build_s", seconds_since(t0)}};
    k["selected"] = c.selected_count();
    k["selected_bound"] = (n + delta - 1) / delta + 1;
    k["parts_bits"] = Json{{"selected", sp.selected_bits},         {"contracted_tree", sp.contracted_tree_bits},
                           {"contracted_grid", sp.contracted_grid_bits}, {"selected_grid", sp.selected_grid_bits},
                           {"prefix_counts", sp.prefix_count_bits},  {"predecessor", sp.predecessor_bits},
                           {"post_view", sp.post_view_bits}};
    k["index_bits"] = sp.total();
    k["bits_per_vertex"] = static_cast<double>(g.size_in_bits() + beers.bits().size_in_bits() + sp.total()) / n;
    k["beer_dist"] = time_queries(qs, [&](Vertex u, Vertex v) { return c.beer_dist(u, v); });
    emit(k);
  }
  return ok;
}

}  // namespace

Instance make_instance(GraphKind kind, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  const std::string s = random_connected_dyck(rng, n);
  const EndpointModel m = kind == GraphKind::proper ? EndpointModel::parse(s, Pairing::fifo) : random_pairing(rng, s);
  auto beers = random_beers(rng, n, rng.unit() * 0.5);
  if (beers.empty()) beers.push_back(static_cast<Vertex>(rng.between(1, n)));
  Instance inst;
  inst.file = GraphFile::from_model(kind, m, beers);
  inst.u = static_cast<Vertex>(rng.between(1, n));
  inst.v = static_cast<Vertex>(rng.between(1, n));
  return inst;
}

std::optional<std::string> check_instance(const Instance& inst, const std::vector<std::uint32_t>& deltas) {
  try {
    const GraphFile& f = inst.file;
    const auto& beers = *f.beer;
    const Vertex u = inst.u, v = inst.v;
    std::ostringstream why;
    const auto check = [&](auto& g, const auto& idx, const char* name) -> bool {
      const auto adj = oracle::AdjacencyList::from_graph(g);
      const Distance d = oracle::dist(adj, u, v);
      if (g.dist(u, v) != d) {
        why << name << " dist " << g.dist(u, v) << ", oracle " << d;
        return false;
      }
      const Path sp = g.shortest_path(u, v);
      if (sp.empty() || sp.size() - 1 != d.value() || sp.front() != u || sp.back() != v) {
        why << name << " shortest_path has wrong length or ends";
        return false;
      }
      const std::uint32_t want = oracle::beer_dist(adj, beers, u, v).value();
      const std::uint32_t got = idx.beer_dist(u, v);
      if (got != want) {
        why << name << " beer_dist " << got << ", oracle " << want;
        return false;
      }
      if (auto bad = oracle::validate_path(adj, beers, idx.beer_path(u, v), u, v, want)) {
        why << name << " beer path: " << *bad;
        return false;
      }
      return true;
    };
    if (f.kind == GraphKind::interval) {
      const IntervalGraph g = f.interval_graph();
      if (!check(g, IntervalBeerIndex(g, f.beer_set()), "interval")) return why.str();
      return std::nullopt;
    }
    const ProperIntervalGraph g = f.proper_graph();
    const ProperBeerIndex basic(g, f.beer_set());
    if (!check(g, basic, "proper")) return why.str();
    for (std::uint32_t delta : deltas) {
      const CompactBeerIndex c(g, f.beer_set(), delta);
      if (c.beer_dist(u, v) != basic.beer_dist(u, v))
        return "compact delta " + std::to_string(delta) + " beer_dist " + std::to_string(c.beer_dist(u, v)) +
               ", basic " + std::to_string(basic.beer_dist(u, v));
    }
    return std::nullopt;
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Beer distance queries on interval and proper interval graphs"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Write a random graph file");
  g->add_option("--kind", gen.kind, "proper or interval")->transform(CLI::CheckedTransformer(kKinds))->required();
  g->add_option("--n", gen.n, "vertex count")->required()->check(CLI::PositiveNumber);
  g->add_option("--beer-density", gen.density, "probability that a vertex is a beer vertex")->check(CLI::Range(0.0, 1.0));
  g->add_option("--seed", gen.seed);
  g->add_option("--out", gen.out, "output path (stdout when omitted)");
  g->add_flag("--allow-disconnected", gen.allow_disconnected, "sample any Dyck path instead of a connected one");

  QueryArgs q;
  auto* qc = app.add_subcommand("query", "Answer one query on a graph file");
  qc->add_option("--graph", q.graph)->required();
  qc->add_option("--op", q.op)
      ->required()
      ->check(CLI::IsMember({"dist", "shortest_path", "beer_dist", "beer_shortest_path"}));
  qc->add_option("--u", q.u)->required();
  qc->add_option("--v", q.v)->required();
  qc->add_flag("--compact", q.compact, "route proper beer queries through the compact index");
  qc->add_option("--delta", q.delta, "level spacing for --compact")->check(CLI::Range(2u, 1u << 30));

  VerifyArgs ver;
  auto* vc = app.add_subcommand("verify", "Differential test against the brute-force oracle");
  vc->add_option("--kind", ver.kind)->transform(CLI::CheckedTransformer(kKinds))->required();
  vc->add_option("--n", ver.n)->check(CLI::PositiveNumber);
  vc->add_option("--trials", ver.trials);
  vc->add_option("--seed", ver.seed);
  vc->add_option("--delta", ver.deltas, "compact Delta values, comma separated")
      ->delimiter(',')
      ->check(CLI::Range(2u, 1u << 30));

  std::string series;
  unsigned max_n = 10;
  auto* cc = app.add_subcommand("count", "Counting series as CSV");
  cc->add_option("--series", series)
      ->required()
      ->check(CLI::IsMember({"cbar", "h", "catalan-identity", "sxy", "bounds", "fnx"}));
  cc->add_option("--max-n", max_n)->check(CLI::Range(0u, 5000u));

  BenchArgs bench;
  auto* bc = app.add_subcommand("bench", "Build and query timings with measured sizes");
  auto* graph_opt = bc->add_option("--graph", bench.graph);
  bc->add_option("--n", bench.n)->excludes(graph_opt)->check(CLI::PositiveNumber);
  bc->add_option("--queries", bench.queries);
  bc->add_option("--seed", bench.seed);
  bc->add_option("--delta", bench.deltas)->delimiter(',')->check(CLI::Range(2u, 1u << 30));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    if (*g) return cmd_generate(gen, out);
    if (*qc) return cmd_query(q, out);
    if (*vc) return cmd_verify(ver, out);
    if (*cc) return cmd_count(series, max_n, out);
    if (*bc) return cmd_bench(bench, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
  return usage;
}

}  // namespace beerpath::cli
