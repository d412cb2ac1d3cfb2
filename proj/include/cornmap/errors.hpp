#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cornmap {

enum class ErrorCode {
  // flag-system axioms
  NotInvolution,
  FixedPointR,
  R0R2NotCommuting,
  EdgeDegenerate,
  Disconnected,
  // construction and parsing
  DegenerateParameters,
  InconsistentRotation,
  SyntaxError,
  ValidationError,
  CornerationMismatch,
  // operators
  DegenerateResult,
  NonUniformValence,
  WidthOutOfRange,
  // groups
  GroupTooLarge,
  GroupNotSubgroup,
  NoHalfReflexiveGroup,
  // corners and cornerations
  StraightCornerHasNoSide,
  StraightHasNoComplement,
  CircuitTooShort,
  NotWedgeCorneration,
  WidthMismatch,
  InvalidCorner,
  // diagrams and split graphs
  GroupDoesNotPreserveL,
  NotTransitive,
  KIntersectsL,
  KNotInvariant,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cornmap
