#include "beerpath/graph_file.hpp"

#include <fstream>
#include <sstream>

#include "beerpath/error.hpp"

namespace beerpath {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<Vertex> parse_ids(std::string_view key, std::string_view value) {
  std::vector<Vertex> out;
  std::istringstream in{std::string(value)};
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || tok[0] == '-' || v > 0xffffffffUL)
      raise(Errc::parse_error, std::string(key) + ": bad vertex id '" + tok + "'");
    out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

}  // namespace

const char* kind_name(GraphKind k) { return k == GraphKind::proper ? "proper" : "interval"; }

GraphFile GraphFile::parse(std::string_view text) {
  GraphFile f;
  bool have_kind = false, have_endpoints = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) raise(Errc::parse_error, "line " + std::to_string(line_no) + ": missing ':'");
    const std::string_view key = trim(line.substr(0, colon)), value = trim(line.substr(colon + 1));
    if (key == "kind") {
      if (value == "proper") f.kind = GraphKind::proper;
      else if (value == "interval") f.kind = GraphKind::interval;
      else raise(Errc::parse_error, "unknown kind '" + std::string(value) + "'");
      have_kind = true;
    } else if (key == "endpoints") {
      f.endpoints = std::string(value);
      have_endpoints = true;
    } else if (key == "rights") {
      f.rights = parse_ids(key, value);
    } else if (key == "beer") {
      f.beer = parse_ids(key, value);
    } else {
      raise(Errc::parse_error, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!have_kind) raise(Errc::parse_error, "missing 'kind' line");
  if (!have_endpoints) raise(Errc::parse_error, "missing 'endpoints' line");
  if (f.kind == GraphKind::proper && !f.rights.empty()) raise(Errc::parse_error, "'rights' is only valid for interval graphs");
  const EndpointModel m = f.model();  // validates balance and owners
  if (f.beer) {
    for (std::size_t i = 0; i < f.beer->size(); ++i) {
      const Vertex b = (*f.beer)[i];
      if (b < 1 || b > m.n()) raise(Errc::out_of_range, "beer vertex " + std::to_string(b) + " out of range");
      if (i > 0 && (*f.beer)[i - 1] >= b) raise(Errc::parse_error, "beer ids must be strictly increasing");
    }
  }
  return f;
}

GraphFile GraphFile::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::parse_error, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

GraphFile GraphFile::from_model(GraphKind kind, const EndpointModel& model, std::optional<std::vector<Vertex>> beer) {
  GraphFile f;
  f.kind = kind;
  f.endpoints = model.endpoints;
  f.beer = std::move(beer);
  if (kind == GraphKind::interval) {
    f.rights = model.right_owners();
    // FIFO pairing is the default and needs no rights line
    bool fifo = true;
    for (std::size_t i = 0; i < f.rights.size(); ++i) fifo = fifo && f.rights[i] == i + 1;
    if (fifo) f.rights.clear();
  }
  return f;
}

std::string GraphFile::emit() const {
  std::string out = "kind: ";
  out += kind_name(kind);
  out += "\nendpoints: " + endpoints + "\n";
  auto ids = [&](const char* key, const std::vector<Vertex>& v) {
    out += key;
    out += ":";
    for (Vertex x : v) out += " " + std::to_string(x);
    out += "\n";
  };
  if (!rights.empty()) ids("rights", rights);
  if (beer) ids("beer", *beer);
  return out;
}

void GraphFile::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::parse_error, "cannot write " + path.string());
  out << emit();
}

EndpointModel GraphFile::model() const {
  if (rights.empty()) return EndpointModel::parse(endpoints, Pairing::fifo);
  return EndpointModel::parse(endpoints, rights);
}

ProperIntervalGraph GraphFile::proper_graph() const { return ProperIntervalGraph::from_model(model()); }

IntervalGraph GraphFile::interval_graph() const { return IntervalGraph::from_model(model()); }

BeerSet GraphFile::beer_set() const {
  if (!beer) raise(Errc::no_beer, "graph file has no beer line");
  return BeerSet(n(), *beer);
}

}  // namespace beerpath
