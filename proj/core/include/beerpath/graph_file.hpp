#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "beerpath/beer_set.hpp"
#include "beerpath/interval.hpp"
#include "beerpath/proper_interval.hpp"

namespace beerpath {

enum class GraphKind { proper, interval };

// Text format, one "key: value" per line:
//   kind: proper|interval
//   endpoints: <2n chars, 0 = left, 1 = right>
//   rights: <owner of each right endpoint>   (interval only; default FIFO)
//   beer: <strictly increasing ids>          (optional, may be empty)
struct GraphFile {
  GraphKind kind = GraphKind::proper;
  std::string endpoints;
  std::vector<Vertex> rights;  // empty means FIFO pairing
  std::optional<std::vector<Vertex>> beer;

  static GraphFile parse(std::string_view text);
  static GraphFile load(const std::filesystem::path& path);
  static GraphFile from_model(GraphKind kind, const EndpointModel& model, std::optional<std::vector<Vertex>> beer);
  std::string emit() const;
  void save(const std::filesystem::path& path) const;

  std::size_t n() const { return endpoints.size() / 2; }
  EndpointModel model() const;
  ProperIntervalGraph proper_graph() const;  // not-proper for nested intervals
  IntervalGraph interval_graph() const;
  BeerSet beer_set() const;  // no-beer error when the line is missing

  friend bool operator==(const GraphFile&, const GraphFile&) = default;
};

const char* kind_name(GraphKind k);

}  // namespace beerpath
