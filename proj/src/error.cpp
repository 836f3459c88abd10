#include "awgcn/error.hpp"

namespace awgcn {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::DanglingRecord: return "DanglingRecord";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::RaggedRow: return "RaggedRow";
    case ErrorCode::EmptySchema: return "EmptySchema";
    case ErrorCode::EmptyDataset: return "EmptyDataset";
    case ErrorCode::SpecOverflow: return "SpecOverflow";
    case ErrorCode::UnknownToken: return "UnknownToken";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::VocabMismatch: return "VocabMismatch";
    case ErrorCode::LabelTooSmall: return "LabelTooSmall";
    case ErrorCode::DivergedLoss: return "DivergedLoss";
    case ErrorCode::NonDeterministicLoss: return "NonDeterministicLoss";
    case ErrorCode::SingleClassTest: return "SingleClassTest";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, long line)
    : std::runtime_error(line >= 0 ? std::string(error_code_name(code)) + " at line " +
                                         std::to_string(line) + ": " + message
                                   : std::string(error_code_name(code)) + ": " + message),
      code_(code),
      line_(line) {}

}  // namespace awgcn
