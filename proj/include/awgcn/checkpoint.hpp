#pragma once

#include <string>
#include <vector>

#include "awgcn/dataset.hpp"
#include "awgcn/model.hpp"

namespace awgcn {

// Everything needed to evaluate, embed or report attention later: the
// resolved config, the vocabulary and label set the tensors are indexed by,
// and the tensors themselves.
struct ModelBundle {
  AwgcnConfig config;
  Vocabulary vocabulary;
  std::vector<std::string> label_set;
  AwgcnParams params;
};

// Versioned JSON container. Doubles are serialized with shortest round-trip
// formatting, so save/load is lossless and byte-identical for equal inputs.
std::string checkpoint_to_json(const ModelBundle& bundle);
ModelBundle checkpoint_from_json(const std::string& text);

void save_checkpoint(const ModelBundle& bundle, const std::string& path);
ModelBundle load_checkpoint(const std::string& path);

}  // namespace awgcn
