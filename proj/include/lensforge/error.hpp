#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lensforge {

// Every failure the library can report. The CLI maps each one to its own
// process exit code (see exit_code()).
enum class ErrorCode {
  ParseError,
  InvalidInput,
  NonManifoldInput,
  NotInvertible,
  NonPrimitiveCurve,
  MalformedMatrix,
  Degenerate,
  InvalidDegree,
  BoundTooSmall,
  NotApplicable,
  BoundTooLarge,
};

std::string_view error_name(ErrorCode code);
int exit_code(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lensforge
