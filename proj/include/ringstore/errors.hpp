#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ringstore {

// Every failure raised by the library carries one of these categories. The
// CLI prints the category name verbatim so callers can match on it.
enum class ErrorCode {
  ZeroInverse,
  DimensionMismatch,
  FieldMismatch,
  OutOfField,
  NotPrime,
  Singular,
  NotInSpan,
  WidthTooLarge,
  BadArguments,
  ShapeError,
  FieldTooSmall,
  InstanceTooLarge,
  NonTermination,
  NotFullRank,
  PartitionMismatch,
  TooFewNodes,
  NotOrdss,
  BadNodeIndex,
  RingTooShort,
  PlanSchemeMismatch,
  SingularBasis,
  SingularFinalSystem,
  ContextMismatch,
  PathBlockedByFailure,
  BadUserIndex,
  AnotherNodeFailed,
  NoFailedNode,
  ParseError,
  InvariantViolation,
  IoError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ringstore
