#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arith {

enum class ErrorKind {
  kDivisionByZero,
  kInvalidValue,
  kInvalidBound,
  kRange,
  kShape,
  kNonInvertible,
  kUnsupportedBackend,
  kDomain,
  kStructure,
  kInvariant,
  kFormat,
  kParse,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; `kind()` distinguishes the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace arith
