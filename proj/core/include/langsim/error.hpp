#pragma once

#include <stdexcept>
#include <string>

namespace langsim {

enum class ErrorCode {
  MissingColumn,
  DuplicateCode,
  EmptyFile,
  InvalidCategoryCount,
  DuplicateFeatureId,
  UnknownLanguage,
  UnknownFeature,
  ValueOutOfRange,
  NoSharedFeatures,
  MissingCategory,
  NotSquare,
  SymmetryViolation,
  UnparseableCell,
  InvalidDiagonal,
  ZeroVariance,
  TooFewPoints,
  NonFiniteValue,
  InvalidDegreesOfFreedom,
  OutOfRangeScore,
  MissingMetadata,
  LanguageSetMismatch,
  EmptyCandidates,
  IoFailure,
};

const char* to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-checkable code plus a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace langsim
