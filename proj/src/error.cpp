#include "varid/error.hpp"

namespace varid {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedRecord: return "MalformedRecord";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::EmptyFile: return "EmptyFile";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::EmptyClassAfterSubsample: return "EmptyClassAfterSubsample";
    case ErrorCode::SpanOutOfBounds: return "SpanOutOfBounds";
    case ErrorCode::EmptyVocabulary: return "EmptyVocabulary";
    case ErrorCode::SingleClassInput: return "SingleClassInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NegativeFeatureValue: return "NegativeFeatureValue";
    case ErrorCode::FeatureSpaceMismatch: return "FeatureSpaceMismatch";
    case ErrorCode::VersionMismatch: return "VersionMismatch";
    case ErrorCode::CorruptFile: return "CorruptFile";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ClassTooSmall: return "ClassTooSmall";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace varid
