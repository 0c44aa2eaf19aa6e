#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lplab {

enum class ErrorCode {
  NonStochasticRow,
  NegativeEntry,
  DuplicateLabel,
  UnreachablePoint,
  ShapeMismatch,
  EmptyModel,
  InvalidObservation,
  InvalidPartition,
  LengthMismatch,
  ParameterSpaceMismatch,
  GroundSetMismatch,
  SpaceTooLarge,
  NotAncillary,
  NotUnique,
  NotLRelated,
  InvalidPrior,
  DegenerateHypothesis,
  EmptyHypothesis,
  UnknownTheta,
  UnknownLabel,
  ParseError,
  InvariantViolation,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this one exception type; the
// code identifies the diagnostic and the message carries the detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lplab
