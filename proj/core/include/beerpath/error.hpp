#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace beerpath {

enum class Errc {
  out_of_range,
  not_found,
  malformed_tree,
  malformed_rect,
  unbalanced,
  not_proper,
  disconnected,
  no_beer,
  argument_order,
  bad_parameter,
  too_large,
  dyck_violation,
  parse_error,
};

std::string_view errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace beerpath
