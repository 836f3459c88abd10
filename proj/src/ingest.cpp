#include "awgcn/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "awgcn/error.hpp"

namespace awgcn {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// "malware.exe" -> "malware"
std::string image_name_stem(std::string_view image) {
  auto slash = image.find_last_of("/\\");
  if (slash != std::string_view::npos) image.remove_prefix(slash + 1);
  auto dot = image.find_last_of('.');
  if (dot != std::string_view::npos && dot > 0) image = image.substr(0, dot);
  return std::string(image);
}

struct LineCursor {
  std::string_view text;
  size_t pos = 0;
  long line_no = 0;  // 1-based number of the last line returned

  bool next(std::string_view& out) {
    if (pos >= text.size()) return false;
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    out = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!out.empty() && out.back() == '\r') out.remove_suffix(1);
    return true;
  }
};

}  // namespace

CallSequence parse_profile(std::string_view text) {
  LineCursor cursor{text};
  std::string_view line;

  // Header: "<pid> <image-name>". Everything before it must be blank.
  std::string_view header;
  long header_line = 0;
  while (cursor.next(line)) {
    if (!trim(line).empty()) {
      header = trim(line);
      header_line = cursor.line_no;
      break;
    }
  }
  if (header.empty()) throw Error(ErrorCode::MalformedHeader, "empty profile", 1);

  size_t space = header.find(' ');
  std::string_view pid = space == std::string_view::npos ? header : header.substr(0, space);
  bool pid_ok = !pid.empty() && space != std::string_view::npos;
  for (char c : pid) {
    if (c < '0' || c > '9') pid_ok = false;
  }
  if (!pid_ok) {
    throw Error(ErrorCode::MalformedHeader, "first line lacks '<pid> <image-name>'", header_line);
  }

  CallSequence seq;
  seq.hash = image_name_stem(trim(header.substr(space + 1)));

  // Records: '#<timestamp>' then a call-name line, then key=value lines.
  // A line with no '=' after a key=value line continues the previous value.
  bool expect_name = false;
  long record_line = 0;
  while (cursor.next(line)) {
    std::string_view t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '#') {
      if (expect_name) {
        throw Error(ErrorCode::DanglingRecord, "timestamp record has no call name", record_line);
      }
      expect_name = true;
      record_line = cursor.line_no;
      continue;
    }
    if (expect_name) {
      Call call;
      call.name = std::string(t);
      seq.seq.push_back(std::move(call));
      expect_name = false;
      continue;
    }
    if (seq.seq.empty()) continue;  // stray text before the first record
    Call& current = seq.seq.back();
    size_t eq = t.find('=');
    if (eq == std::string_view::npos) {
      // Continuation of the previous parameter value, if there is one.
      if (!current.pars.empty()) current.pars.back().second += std::string(t);
      continue;
    }
    std::string key(t.substr(0, eq));
    std::string value(t.substr(eq + 1));
    auto existing = std::find_if(current.pars.begin(), current.pars.end(),
                                 [&](const auto& kv) { return kv.first == key; });
    if (existing != current.pars.end()) {
      existing->second = value;  // duplicate key within a record: last one wins
    } else {
      current.pars.emplace_back(std::move(key), std::move(value));
    }
  }
  if (expect_name) {
    throw Error(ErrorCode::DanglingRecord, "timestamp record has no call name", record_line);
  }
  return seq;
}

namespace {

CallSequence sequence_from_json(const ordered_json& rec) {
  if (!rec.is_object()) throw std::runtime_error("record is not an object");
  CallSequence seq;
  seq.hash = rec.at("hash").get<std::string>();
  seq.label = rec.at("label").get<std::string>();
  if (rec.contains("test_only")) seq.test_only = rec.at("test_only").get<bool>();
  const auto& arr = rec.at("seq");
  if (!arr.is_array()) throw std::runtime_error("'seq' is not an array");
  for (const auto& item : arr) {
    Call call;
    if (item.is_string()) {
      call.name = item.get<std::string>();
    } else if (item.is_object()) {
      call.name = item.at("name").get<std::string>();
      if (item.contains("pars")) {
        for (const auto& [k, v] : item.at("pars").items()) {
          call.pars.emplace_back(k, v.get<std::string>());
        }
      }
    } else {
      throw std::runtime_error("'seq' entry is neither string nor object");
    }
    if (call.name.empty()) throw std::runtime_error("empty call name");
    seq.seq.push_back(std::move(call));
  }
  return seq;
}

}  // namespace

JsonlResult parse_jsonl(std::istream& in, bool strict) {
  JsonlResult result;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      ordered_json rec = ordered_json::parse(line);
      result.sequences.push_back(sequence_from_json(rec));
    } catch (const std::exception& e) {
      if (strict) throw Error(ErrorCode::ParseError, e.what(), line_no);
      result.issues.push_back({line_no, e.what()});
    }
  }
  return result;
}

JsonlResult parse_jsonl_text(std::string_view text, bool strict) {
  std::istringstream in{std::string(text)};
  return parse_jsonl(in, strict);
}

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

}  // namespace

std::vector<CallSequence> parse_wide_csv(std::istream& in, const WideCsvOptions& opts) {
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorCode::EmptySchema, "missing CSV header", 1);
  }
  std::vector<std::string> header = split_csv_row(line);
  int hash_idx = -1;
  int label_idx = -1;
  std::vector<size_t> call_cols;
  for (size_t i = 0; i < header.size(); ++i) {
    if (header[i] == opts.hash_col) {
      hash_idx = static_cast<int>(i);
    } else if (header[i] == opts.label_col) {
      label_idx = static_cast<int>(i);
    } else {
      call_cols.push_back(i);
    }
  }
  if (hash_idx < 0) {
    throw Error(ErrorCode::EmptySchema, "missing hash column '" + opts.hash_col + "'", 1);
  }
  if (label_idx < 0) {
    throw Error(ErrorCode::EmptySchema, "missing label column '" + opts.label_col + "'", 1);
  }
  if (call_cols.empty()) {
    throw Error(ErrorCode::EmptySchema, "no call columns", 1);
  }

  std::vector<CallSequence> seqs;
  long row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    std::vector<std::string> fields = split_csv_row(line);
    if (fields.size() != header.size()) {
      throw Error(ErrorCode::RaggedRow,
                  "row has " + std::to_string(fields.size()) + " fields, header has " +
                      std::to_string(header.size()),
                  row);
    }
    CallSequence seq;
    seq.hash = fields[hash_idx];
    seq.label = fields[label_idx];
    seq.seq.reserve(call_cols.size());
    for (size_t col : call_cols) {
      Call call;
      call.name = fields[col];
      seq.seq.push_back(std::move(call));
    }
    seqs.push_back(std::move(seq));
  }
  return seqs;
}

Dataset build_dataset(std::vector<CallSequence> seqs) {
  Dataset ds;
  std::set<std::string> names;
  std::set<std::string> labels;
  std::set<std::string> hashes;
  for (auto& seq : seqs) {
    if (seq.seq.empty()) {
      ++ds.dropped_empty;
      continue;
    }
    for (const auto& call : seq.seq) names.insert(call.name);
    labels.insert(seq.label);
    if (!hashes.insert(seq.hash).second) ++ds.duplicate_hashes;
    ds.sequences.push_back(std::move(seq));
  }
  if (ds.sequences.empty()) {
    throw Error(ErrorCode::EmptyDataset, "no non-empty sequences to admit");
  }
  ds.vocabulary = Vocabulary(std::vector<std::string>(names.begin(), names.end()));
  ds.label_set.assign(labels.begin(), labels.end());
  return ds;
}

std::string to_jsonl_line(const CallSequence& seq) {
  ordered_json rec;
  rec["hash"] = seq.hash;
  rec["label"] = seq.label;
  ordered_json arr = ordered_json::array();
  for (const auto& call : seq.seq) {
    if (call.pars.empty()) {
      arr.push_back(call.name);
    } else {
      ordered_json obj;
      obj["name"] = call.name;
      ordered_json pars;
      for (const auto& [k, v] : call.pars) pars[k] = v;
      obj["pars"] = std::move(pars);
      arr.push_back(std::move(obj));
    }
  }
  rec["seq"] = std::move(arr);
  if (seq.test_only) rec["test_only"] = true;
  return rec.dump();
}

void write_jsonl(const std::vector<CallSequence>& seqs, std::ostream& out) {
  for (const auto& seq : seqs) out << to_jsonl_line(seq) << '\n';
}

Dataset load_dataset_file(const std::string& path, bool strict) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  JsonlResult parsed = parse_jsonl(in, strict);
  return build_dataset(std::move(parsed.sequences));
}

void save_dataset_file(const Dataset& ds, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  write_jsonl(ds.sequences, out);
}

}  // namespace awgcn
