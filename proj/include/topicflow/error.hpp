#pragma once

#include <stdexcept>
#include <string>

namespace topicflow {

enum class ErrorCode {
  ParseError,
  MissingFile,
  DuplicateId,
  MissingRole,
  MismatchedCorpus,
  EmptyDocument,
  EmptyVocabulary,
  InvalidConfig,
  EmptyCorpus,
  IndexOutOfRange,
  DegeneratePrior,
  UnseenWord,
  VersionMismatch,
  EmptyRange,
  LengthMismatch,
  UndefinedGamma,
  ZeroVariance,
  AllZeroSeries,
  UnknownReference,
  IndexMismatch,
  InconsistentInputs,
  ValidationFailed,
  IoError,
};

const char* to_string(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string msg)
      : std::runtime_error(std::move(msg)), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode c, const std::string& msg) {
  throw Error(c, std::string(to_string(c)) + ": " + msg);
}

}  // namespace topicflow
