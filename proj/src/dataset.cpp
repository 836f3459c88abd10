#include "awgcn/dataset.hpp"

#include <algorithm>

namespace awgcn {

Vocabulary::Vocabulary(std::vector<std::string> sorted_names) : names_(std::move(sorted_names)) {
  index_.reserve(names_.size());
  for (size_t i = 0; i < names_.size(); ++i) index_[names_[i]] = static_cast<int>(i);
}

int Vocabulary::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

int Dataset::label_index(const std::string& label) const {
  auto it = std::lower_bound(label_set.begin(), label_set.end(), label);
  if (it == label_set.end() || *it != label) return -1;
  return static_cast<int>(it - label_set.begin());
}

}  // namespace awgcn
