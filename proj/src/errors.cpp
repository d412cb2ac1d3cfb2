#include "cornmap/errors.hpp"

namespace cornmap {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::FixedPointR: return "FixedPointR_i";
    case ErrorCode::R0R2NotCommuting: return "R0R2NotCommuting";
    case ErrorCode::EdgeDegenerate: return "EdgeDegenerate";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::DegenerateParameters: return "DegenerateParameters";
    case ErrorCode::InconsistentRotation: return "InconsistentRotation";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::CornerationMismatch: return "CornerationMismatch";
    case ErrorCode::DegenerateResult: return "DegenerateResult";
    case ErrorCode::NonUniformValence: return "NonUniformValence";
    case ErrorCode::WidthOutOfRange: return "WidthOutOfRange";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::GroupNotSubgroup: return "GroupNotSubgroup";
    case ErrorCode::NoHalfReflexiveGroup: return "NoHalfReflexiveGroup";
    case ErrorCode::StraightCornerHasNoSide: return "StraightCornerHasNoSide";
    case ErrorCode::StraightHasNoComplement: return "StraightHasNoComplement";
    case ErrorCode::CircuitTooShort: return "CircuitTooShort";
    case ErrorCode::NotWedgeCorneration: return "NotWedgeCorneration";
    case ErrorCode::WidthMismatch: return "WidthMismatch";
    case ErrorCode::InvalidCorner: return "InvalidCorner";
    case ErrorCode::GroupDoesNotPreserveL: return "GroupDoesNotPreserveL";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::KIntersectsL: return "KIntersectsL";
    case ErrorCode::KNotInvariant: return "KNotInvariant";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace cornmap
