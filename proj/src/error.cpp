#include "chordal/error.hpp"

namespace chordal {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kAntichainViolation: return "AntichainViolation";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kNotUniform: return "NotUniform";
    case ErrorCode::kSizeViolation: return "SizeViolation";
    case ErrorCode::kInvalidStep: return "InvalidStep";
    case ErrorCode::kZeroIdeal: return "ZeroIdeal";
    case ErrorCode::kZeroTable: return "ZeroTable";
    case ErrorCode::kTooManyGenerators: return "TooManyGenerators";
    case ErrorCode::kDegreeMismatch: return "DegreeMismatch";
    case ErrorCode::kNotSimplicial: return "NotSimplicial";
    case ErrorCode::kCircuitNotThroughE: return "CircuitNotThroughE";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

ParseError::ParseError(int line, int column, const std::string& message)
    : Error(ErrorCode::kParseError,
            "line " + std::to_string(line) +
                (column > 0 ? ", column " + std::to_string(column) : std::string()) + ": " +
                message),
      line_(line),
      column_(column) {}

}  // namespace chordal
