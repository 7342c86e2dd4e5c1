#pragma once

#include <stdexcept>
#include <string>

namespace cylbij {

enum class ErrorKind {
  invalid_partition,
  invalid_profile,
  incomparable_profiles,
  invalid_coordinate,
  not_inside_corner,
  cannot_add_inversion,
  local_rule_domain,
  invalid_cpp,
  invalid_alcd,
  parse_error,
  internal,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `kind()` lets callers (the CLI in
/// particular) separate bad input from broken invariants.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Internal errors mean a broken invariant, never bad input.
  bool is_internal() const noexcept { return kind_ == ErrorKind::internal; }

 private:
  ErrorKind kind_;
};

}  // namespace cylbij
