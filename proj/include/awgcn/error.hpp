#pragma once

#include <stdexcept>
#include <string>

namespace awgcn {

// Failure codes surfaced verbatim by the CLI as machine-readable errors.
enum class ErrorCode {
  MalformedHeader,
  DanglingRecord,
  ParseError,
  RaggedRow,
  EmptySchema,
  EmptyDataset,
  SpecOverflow,
  UnknownToken,
  ShapeMismatch,
  VocabMismatch,
  LabelTooSmall,
  DivergedLoss,
  NonDeterministicLoss,
  SingleClassTest,
  InvalidArgument,
  IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, long line = -1);

  ErrorCode code() const { return code_; }
  // 1-based input line or row index, -1 when not applicable.
  long line() const { return line_; }

 private:
  ErrorCode code_;
  long line_;
};

}  // namespace awgcn
