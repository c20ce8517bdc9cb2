#pragma once

#include <stdexcept>
#include <string>

namespace chordal {

enum class ErrorCode {
  kAntichainViolation = 1,
  kVertexOutOfRange,
  kNotUniform,
  kSizeViolation,
  kInvalidStep,
  kZeroIdeal,
  kZeroTable,
  kTooManyGenerators,
  kDegreeMismatch,
  kNotSimplicial,
  kCircuitNotThroughE,
  kParseError,
  kInvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the text/JSON readers. Line and column are 1-based; column 0
/// means the error concerns the whole line.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace chordal
