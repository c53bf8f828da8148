#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schurlab {

enum class ErrorCode {
  ParseError,
  NotMonotone,
  NotACorner,
  BadOrder,
  NotContained,
  SizeMismatch,
  OracleBoundExceeded,
  ModeMismatch,
  OrderOutOfRange,
  InexactDivision,
  BadParams,
  InvalidInput,
  InternalInvariant,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` identifies the failure.
class SchurError : public std::runtime_error {
 public:
  SchurError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace schurlab
