#pragma once

#include <stdexcept>
#include <string>

namespace graphjac {

enum class ErrorCode {
  LoopEdge,
  Disconnected,
  VertexOutOfRange,
  NotSquare,
  DimensionMismatch,
  Singular,
  NonZeroDegree,
  NotCyclic,
  TooLarge,
  ParseError,
};

const char* to_string(ErrorCode code) noexcept;

/// Raised for every recoverable failure in the library. The code is what
/// callers (and the CLI's exit status) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace graphjac
