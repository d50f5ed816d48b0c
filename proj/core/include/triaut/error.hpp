#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace triaut {

enum class ErrorCode {
  ModeMismatch,
  ArityMismatch,
  IndexOutOfRange,
  BudgetExceeded,
  DivisionByZero,
  ZeroAlpha,
  VariableDependence,
  EqualIndices,
  NotTriangular,
  NotUnitriangular,
  ZeroShift,
  LayerViolation,
  BadIndices,
  NotInDerivedSubgroup,
  SideConditionViolated,
  DegreeTooSmall,
  UnreducedWord,
  WordInCyclicFactor,
  UnsupportedIndices,
  TrivialInput,
  NotInvolution,
  NotElementary,
  InvalidDocument,
  VerificationFailed,
  Parse,
};

std::string_view to_string(ErrorCode code);

/// Domain or precondition failure. The message names the violated condition.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Malformed textual input. `offset` is the 1-based byte offset of the
/// offending character (one past the end for premature end of input).
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message);

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace triaut
