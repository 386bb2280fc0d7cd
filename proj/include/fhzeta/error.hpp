#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fhzeta {

enum class ErrorCode {
  // precondition failures
  PoleAtNonpositiveInteger,
  NonpositiveOrder,
  NegativeArgument,
  OutOfRegion,
  PoleProximity,
  InsufficientStrip,
  PoleOfZeta,
  PoleAtOne,
  BoundaryTooCloseToSingularity,
  InvalidRectangle,
  NoSignChange,
  PoleInBracket,
  GridOutsideStrip,
  MonotonicityViolated,
  PhaseAnchorInvalid,
  InvalidArgument,
  // numerical failures
  PhaseTrackingFailed,
  QuadratureFailed,
  SeriesDiverged,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for failures of the numerics themselves, as opposed to bad input.
constexpr bool is_numerical(ErrorCode code) noexcept {
  return code == ErrorCode::PhaseTrackingFailed ||
         code == ErrorCode::QuadratureFailed ||
         code == ErrorCode::SeriesDiverged;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fhzeta
