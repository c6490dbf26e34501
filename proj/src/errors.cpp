#include "flagmodel/errors.hpp"

namespace flagmodel {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::AmbientTooSmall: return "AmbientTooSmall";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::NonIncreasingKs: return "NonIncreasingKs";
    case ErrorCode::InvalidSpectrum: return "InvalidSpectrum";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::NotSpecialOrthogonal: return "NotSpecialOrthogonal";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::SpectrumMismatch: return "SpectrumMismatch";
    case ErrorCode::EigenvalueGapTooSmall: return "EigenvalueGapTooSmall";
    case ErrorCode::DegenerateBoundaryGap: return "DegenerateBoundaryGap";
    case ErrorCode::StepNotFinite: return "StepNotFinite";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::InvalidWeight: return "InvalidWeight";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DeltaOutOfRange: return "DeltaOutOfRange";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_numerical(ErrorCode code) {
  switch (code) {
    case ErrorCode::SpectrumMismatch:
    case ErrorCode::EigenvalueGapTooSmall:
    case ErrorCode::DegenerateBoundaryGap:
    case ErrorCode::StepNotFinite:
      return true;
    default:
      return false;
  }
}

FlagError::FlagError(ErrorCode code, const std::string& message,
                     std::optional<double> value)
    : std::runtime_error(std::string(error_name(code)) + ": " + message),
      code_(code),
      value_(value) {}

}  // namespace flagmodel
