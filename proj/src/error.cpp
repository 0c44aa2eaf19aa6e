#include "lplab/error.hpp"

namespace lplab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonStochasticRow: return "NonStochasticRow";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::UnreachablePoint: return "UnreachablePoint";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::EmptyModel: return "EmptyModel";
    case ErrorCode::InvalidObservation: return "InvalidObservation";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ParameterSpaceMismatch: return "ParameterSpaceMismatch";
    case ErrorCode::GroundSetMismatch: return "GroundSetMismatch";
    case ErrorCode::SpaceTooLarge: return "SpaceTooLarge";
    case ErrorCode::NotAncillary: return "NotAncillary";
    case ErrorCode::NotUnique: return "NotUnique";
    case ErrorCode::NotLRelated: return "NotLRelated";
    case ErrorCode::InvalidPrior: return "InvalidPrior";
    case ErrorCode::DegenerateHypothesis: return "DegenerateHypothesis";
    case ErrorCode::EmptyHypothesis: return "EmptyHypothesis";
    case ErrorCode::UnknownTheta: return "UnknownTheta";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace lplab
