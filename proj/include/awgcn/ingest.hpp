#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "awgcn/dataset.hpp"

namespace awgcn {

// Parses one sandbox profile dump. Expected layout:
//   <pid> <image-name>
//   #<timestamp>
//   <call name>
//   key=value
//   ...
// A line without '=' after a key=value line continues the previous value.
// The returned sequence has hash = image-name stem and label unset.
// Throws Error(MalformedHeader) or Error(DanglingRecord) with a line number.
CallSequence parse_profile(std::string_view text);

struct ParseIssue {
  long line = 0;
  std::string message;
};

struct JsonlResult {
  std::vector<CallSequence> sequences;
  std::vector<ParseIssue> issues;
};

// Line-delimited records: {"hash": ..., "label": ..., "seq": [...]} where seq
// entries are bare name strings or {"name": ..., "pars": {...}} objects.
// In lenient mode (default) bad lines are collected in issues and skipped;
// strict escalates the first issue to Error(ParseError).
JsonlResult parse_jsonl(std::istream& in, bool strict = false);
JsonlResult parse_jsonl_text(std::string_view text, bool strict = false);

struct WideCsvOptions {
  std::string hash_col = "hash";
  std::string label_col = "label";
};

// Header + rows; every non-hash, non-label column is one call position.
// Throws Error(EmptySchema) or Error(RaggedRow) with the offending row index.
std::vector<CallSequence> parse_wide_csv(std::istream& in, const WideCsvOptions& opts = {});

// Admission step: drops empty sequences (counted), builds the lexicographic
// vocabulary and label set. Throws Error(EmptyDataset) if nothing survives.
Dataset build_dataset(std::vector<CallSequence> seqs);

// JSONL export, one record per line; inverse of parse_jsonl. Calls without
// parameters are exported as bare strings.
void write_jsonl(const std::vector<CallSequence>& seqs, std::ostream& out);
std::string to_jsonl_line(const CallSequence& seq);

// Convenience file helpers used by the CLI and bindings.
Dataset load_dataset_file(const std::string& path, bool strict = false);
void save_dataset_file(const Dataset& ds, const std::string& path);

}  // namespace awgcn
