#ifndef VARID_ERROR_HPP
#define VARID_ERROR_HPP

#include <stdexcept>
#include <string>

namespace varid {

enum class ErrorCode {
  MalformedRecord,
  UnknownLabel,
  EmptyFile,
  InsufficientSamples,
  EmptyClassAfterSubsample,
  SpanOutOfBounds,
  EmptyVocabulary,
  SingleClassInput,
  DimensionMismatch,
  NegativeFeatureValue,
  FeatureSpaceMismatch,
  VersionMismatch,
  CorruptFile,
  LengthMismatch,
  ClassTooSmall,
  InvalidArgument,
  IoError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace varid

#endif  // VARID_ERROR_HPP
