#pragma once

#include <stdexcept>
#include <string>

namespace designforge {

enum class ErrorKind {
  invalid_argument,
  invalid_element,
  not_a_subgroup,
  not_in_catalog,
  duplicate_label,
  unsupported_order,
  ingredient_unavailable,
  precondition,
  parse,
  io,
};

// Single exception type for the core library. The C API maps `kind` onto its
// status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace designforge
