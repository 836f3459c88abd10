#pragma once

#include <string>
#include <unordered_map>
#include <vector>

namespace awgcn {

// One recorded call: a name plus its parameters in record order. Parameter
// keys are unique within a call; values are opaque strings.
struct Call {
  std::string name;
  std::vector<std::pair<std::string, std::string>> pars;

  bool operator==(const Call&) const = default;
};

struct CallSequence {
  std::string hash;
  std::string label;
  std::vector<Call> seq;
  // Sequences flagged test-only (noise augmentation) never enter a train split.
  bool test_only = false;

  bool operator==(const CallSequence&) const = default;
};

// Global ordered set of unique call names across a dataset. Ordering is
// lexicographic so one-hot indices are reproducible across runs and machines.
class Vocabulary {
 public:
  Vocabulary() = default;
  explicit Vocabulary(std::vector<std::string> sorted_names);

  size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(size_t i) const { return names_[i]; }

  // Returns -1 when the token is unknown.
  int index_of(const std::string& name) const;
  bool contains(const std::string& name) const { return index_of(name) >= 0; }

  bool operator==(const Vocabulary& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

struct Dataset {
  std::vector<CallSequence> sequences;
  Vocabulary vocabulary;
  std::vector<std::string> label_set;  // sorted lexicographically
  size_t dropped_empty = 0;            // admission warning count
  size_t duplicate_hashes = 0;         // duplicates are kept, only counted

  int label_index(const std::string& label) const;
};

}  // namespace awgcn
