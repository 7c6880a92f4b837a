#include "beerpath/error.hpp"

namespace beerpath {

std::string_view errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::out_of_range: return "out-of-range";
    case Errc::not_found: return "not-found";
    case Errc::malformed_tree: return "malformed-tree";
    case Errc::malformed_rect: return "malformed-rect";
    case Errc::unbalanced: return "unbalanced";
    case Errc::not_proper: return "not-proper";
    case Errc::disconnected: return "disconnected";
    case Errc::no_beer: return "no-beer";
    case Errc::argument_order: return "argument-order";
    case Errc::bad_parameter: return "bad-parameter";
    case Errc::too_large: return "too-large";
    case Errc::dyck_violation: return "dyck-violation";
    case Errc::parse_error: return "parse-error";
  }
  return "unknown";
}

}  // namespace beerpath
