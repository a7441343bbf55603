#pragma once

#include <stdexcept>
#include <string>

namespace cbd {

enum class ErrorCode {
  // model validation
  DuplicateId,
  ProbabilitySumNotOne,
  NegativeProbability,
  AlphabetMismatch,
  EmptyContext,
  UnknownObject,
  UnknownContext,
  UnusedObject,
  InvalidOutcome,
  // parsing and ingestion
  SyntaxError,
  EmptyInput,
  InconsistentMembership,
  IoError,
  // numeric engines
  DimensionMismatch,
  InvalidExpectation,
  TooLarge,
  OracleTooLarge,
  ShapeMismatch,
  NotApplicable,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace cbd
