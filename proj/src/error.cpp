#include "lensforge/error.hpp"

namespace lensforge {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NonManifoldInput: return "NonManifoldInput";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NonPrimitiveCurve: return "NonPrimitiveCurve";
    case ErrorCode::MalformedMatrix: return "MalformedMatrix";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::InvalidDegree: return "InvalidDegree";
    case ErrorCode::BoundTooSmall: return "BoundTooSmall";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::BoundTooLarge: return "BoundTooLarge";
  }
  return "Unknown";
}

int exit_code(ErrorCode code) {
  // 0 is success and 1 is reserved for unexpected failures.
  return 2 + static_cast<int>(code);
}

}  // namespace lensforge
