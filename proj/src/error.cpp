#include "fhzeta/error.hpp"

namespace fhzeta {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::PoleAtNonpositiveInteger: return "PoleAtNonpositiveInteger";
    case ErrorCode::NonpositiveOrder: return "NonpositiveOrder";
    case ErrorCode::NegativeArgument: return "NegativeArgument";
    case ErrorCode::OutOfRegion: return "OutOfRegion";
    case ErrorCode::PoleProximity: return "PoleProximity";
    case ErrorCode::InsufficientStrip: return "InsufficientStrip";
    case ErrorCode::PoleOfZeta: return "PoleOfZeta";
    case ErrorCode::PoleAtOne: return "PoleAtOne";
    case ErrorCode::BoundaryTooCloseToSingularity: return "BoundaryTooCloseToSingularity";
    case ErrorCode::InvalidRectangle: return "InvalidRectangle";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::PoleInBracket: return "PoleInBracket";
    case ErrorCode::GridOutsideStrip: return "GridOutsideStrip";
    case ErrorCode::MonotonicityViolated: return "MonotonicityViolated";
    case ErrorCode::PhaseAnchorInvalid: return "PhaseAnchorInvalid";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::PhaseTrackingFailed: return "PhaseTrackingFailed";
    case ErrorCode::QuadratureFailed: return "QuadratureFailed";
    case ErrorCode::SeriesDiverged: return "SeriesDiverged";
  }
  return "Unknown";
}

}  // namespace fhzeta
