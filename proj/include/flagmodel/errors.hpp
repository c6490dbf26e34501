#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace flagmodel {

enum class ErrorCode {
  AmbientTooSmall,
  KOutOfRange,
  NonIncreasingKs,
  InvalidSpectrum,
  SignatureMismatch,
  NotSpecialOrthogonal,
  NotSymmetric,
  SpectrumMismatch,
  EigenvalueGapTooSmall,
  DegenerateBoundaryGap,
  StepNotFinite,
  NotDominant,
  InvalidWeight,
  IndexOutOfRange,
  DeltaOutOfRange,
  HypothesisViolated,
  InvalidArgument,
  ParseError,
};

std::string_view error_name(ErrorCode code);

/// True for failures caused by the numerical data (spectral mismatch,
/// degenerate gaps, non-finite values) rather than malformed input.
bool is_numerical(ErrorCode code);

class FlagError : public std::runtime_error {
 public:
  FlagError(ErrorCode code, const std::string& message,
            std::optional<double> value = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  /// Offending quantity (a gap, a residual) when one exists.
  std::optional<double> value() const noexcept { return value_; }

 private:
  ErrorCode code_;
  std::optional<double> value_;
};

}  // namespace flagmodel
