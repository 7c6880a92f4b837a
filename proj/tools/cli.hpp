#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "beerpath/graph_file.hpp"

namespace beerpath::cli {

enum Exit : int { ok = 0, failed = 1, usage = 2 };

// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// One random (graph, beer set, query) instance, fully determined by (kind, n, seed).
struct Instance {
  GraphFile file;
  Vertex u = 0, v = 0;
};
Instance make_instance(GraphKind kind, std::size_t n, std::uint64_t seed);

// Engine against the brute-force oracle, and every compact Delta against the
// basic index. nullopt on agreement, otherwise what went wrong.
std::optional<std::string> check_instance(const Instance& inst, const std::vector<std::uint32_t>& deltas);

}  // namespace beerpath::cli
