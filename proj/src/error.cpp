#include "robench/error.hpp"

namespace robench {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnknownFunction: return "UnknownFunction";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonFiniteInput: return "NonFiniteInput";
    case ErrorCode::DisabledFunction: return "DisabledFunction";
    case ErrorCode::BatchTooLarge: return "BatchTooLarge";
    case ErrorCode::UseAfterDispose: return "UseAfterDispose";
    case ErrorCode::PrecisionMismatch: return "PrecisionMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::CorruptInstance: return "CorruptInstance";
    case ErrorCode::UnsupportedAtDim2: return "UnsupportedAtDim2";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace robench
