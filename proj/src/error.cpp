#include "topicflow/error.hpp"

namespace topicflow {

const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MissingFile: return "MissingFile";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::MissingRole: return "MissingRole";
    case ErrorCode::MismatchedCorpus: return "MismatchedCorpus";
    case ErrorCode::EmptyDocument: return "EmptyDocument";
    case ErrorCode::EmptyVocabulary: return "EmptyVocabulary";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DegeneratePrior: return "DegeneratePrior";
    case ErrorCode::UnseenWord: return "UnseenWord";
    case ErrorCode::VersionMismatch: return "VersionMismatch";
    case ErrorCode::EmptyRange: return "EmptyRange";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::UndefinedGamma: return "UndefinedGamma";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::AllZeroSeries: return "AllZeroSeries";
    case ErrorCode::UnknownReference: return "UnknownReference";
    case ErrorCode::IndexMismatch: return "IndexMismatch";
    case ErrorCode::InconsistentInputs: return "InconsistentInputs";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace topicflow
