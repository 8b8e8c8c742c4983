#include "langsim/error.hpp"

namespace langsim {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MissingColumn: return "MissingColumn";
    case ErrorCode::DuplicateCode: return "DuplicateCode";
    case ErrorCode::EmptyFile: return "EmptyFile";
    case ErrorCode::InvalidCategoryCount: return "InvalidCategoryCount";
    case ErrorCode::DuplicateFeatureId: return "DuplicateFeatureId";
    case ErrorCode::UnknownLanguage: return "UnknownLanguage";
    case ErrorCode::UnknownFeature: return "UnknownFeature";
    case ErrorCode::ValueOutOfRange: return "ValueOutOfRange";
    case ErrorCode::NoSharedFeatures: return "NoSharedFeatures";
    case ErrorCode::MissingCategory: return "MissingCategory";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::SymmetryViolation: return "SymmetryViolation";
    case ErrorCode::UnparseableCell: return "UnparseableCell";
    case ErrorCode::InvalidDiagonal: return "InvalidDiagonal";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::InvalidDegreesOfFreedom: return "InvalidDegreesOfFreedom";
    case ErrorCode::OutOfRangeScore: return "OutOfRangeScore";
    case ErrorCode::MissingMetadata: return "MissingMetadata";
    case ErrorCode::LanguageSetMismatch: return "LanguageSetMismatch";
    case ErrorCode::EmptyCandidates: return "EmptyCandidates";
    case ErrorCode::IoFailure: return "IoFailure";
  }
  return "UnknownError";
}

}  // namespace langsim
