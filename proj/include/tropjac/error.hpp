#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropjac {

enum class ErrorCode {
  DisconnectedGraph,
  UnknownVertex,
  UnknownEdge,
  OutOfRangePosition,
  GenusZero,
  GenusTooSmall,
  DivisionByZero,
  UnboundSymbol,
  PoleAtPoint,
  CycleLimitExceeded,
  NotSpanningTree,
  SameVertex,
  DegreeMismatch,
  HypothesisViolated,
  NotACycle,
  DegreeOutOfRange,
  NotStable,
  IrrationalLength,
  ParseError,
  ValidationError,
  Internal,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type; `code()` is stable and
// is what the CLI serializes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tropjac
