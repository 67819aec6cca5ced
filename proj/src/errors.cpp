#include "ringstore/errors.hpp"

namespace ringstore {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::OutOfField: return "OutOfField";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotInSpan: return "NotInSpan";
    case ErrorCode::WidthTooLarge: return "WidthTooLarge";
    case ErrorCode::BadArguments: return "BadArguments";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::NonTermination: return "NonTermination";
    case ErrorCode::NotFullRank: return "NotFullRank";
    case ErrorCode::PartitionMismatch: return "PartitionMismatch";
    case ErrorCode::TooFewNodes: return "TooFewNodes";
    case ErrorCode::NotOrdss: return "NotOrdss";
    case ErrorCode::BadNodeIndex: return "BadNodeIndex";
    case ErrorCode::RingTooShort: return "RingTooShort";
    case ErrorCode::PlanSchemeMismatch: return "PlanSchemeMismatch";
    case ErrorCode::SingularBasis: return "SingularBasis";
    case ErrorCode::SingularFinalSystem: return "SingularFinalSystem";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::PathBlockedByFailure: return "PathBlockedByFailure";
    case ErrorCode::BadUserIndex: return "BadUserIndex";
    case ErrorCode::AnotherNodeFailed: return "AnotherNodeFailed";
    case ErrorCode::NoFailedNode: return "NoFailedNode";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace ringstore
