#include "cbd/errors.hpp"

namespace cbd {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::ProbabilitySumNotOne: return "ProbabilitySumNotOne";
    case ErrorCode::NegativeProbability: return "NegativeProbability";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::EmptyContext: return "EmptyContext";
    case ErrorCode::UnknownObject: return "UnknownObject";
    case ErrorCode::UnknownContext: return "UnknownContext";
    case ErrorCode::UnusedObject: return "UnusedObject";
    case ErrorCode::InvalidOutcome: return "InvalidOutcome";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InconsistentMembership: return "InconsistentMembership";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidExpectation: return "InvalidExpectation";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::OracleTooLarge: return "OracleTooLarge";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotApplicable: return "NotApplicable";
  }
  return "Unknown";
}

}  // namespace cbd
