#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace curvesi {

enum class ErrorCode {
  InvalidLetter,
  NotCyclicallyReduced,
  EmptyWord,
  NonPrimitive,
  IndistinctRays,
  DivergenceBound,
  InvalidRibbonOrder,
  NonHyperbolic,
  Overflow,
  EmptyFamily,
  Precondition,
  InvalidConfig,
  ParseError,
  IoError,
  Internal,
};

constexpr std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidLetter: return "InvalidLetter";
    case ErrorCode::NotCyclicallyReduced: return "NotCyclicallyReduced";
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::NonPrimitive: return "NonPrimitive";
    case ErrorCode::IndistinctRays: return "IndistinctRays";
    case ErrorCode::DivergenceBound: return "DivergenceBound";
    case ErrorCode::InvalidRibbonOrder: return "InvalidRibbonOrder";
    case ErrorCode::NonHyperbolic: return "NonHyperbolic";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::Precondition: return "Precondition";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

/// Domain error raised by every curvesi operation. `code()` identifies the
/// failure; the CLI prints `error_name(code())` on the diagnostic stream.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace curvesi
