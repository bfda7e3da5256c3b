#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace robench {

enum class ErrorCode {
  UnknownFunction,
  DimensionTooSmall,
  DimensionMismatch,
  NonFiniteInput,
  DisabledFunction,
  BatchTooLarge,
  UseAfterDispose,
  PrecisionMismatch,
  InvalidArgument,
  ParseError,
  CorruptInstance,
  UnsupportedAtDim2,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace robench
