#pragma once

#include <optional>
#include <string>
#include <vector>

#include "awgcn/dataset.hpp"
#include "awgcn/matrix.hpp"

namespace awgcn {

struct MarkovEdge {
  int src = 0;  // vocabulary index
  int dst = 0;
  long count = 0;
  double prob = 0.0;  // count / total out-count of src

  bool operator==(const MarkovEdge&) const = default;
};

// Per-sequence Markov-chain graph. Nodes are the vocabulary indices that
// occur in the sequence, ascending; edges are unique (src, dst) pairs with
// occurrence counts and row-stochastic transition probabilities.
struct MarkovGraph {
  std::vector<int> present_nodes;
  std::vector<MarkovEdge> edges;
  int kgram = 1;
  std::string label;
  std::string hash;

  size_t node_count() const { return present_nodes.size(); }
  // Position of a vocabulary index within present_nodes, -1 if absent.
  int local_index(int vocab_index) const;
};

// Counts call transitions of s. With window k > 1, pairs up to k positions
// apart are counted in the same table to keep longer-range order.
// Throws Error(UnknownToken) for calls missing from vocab.
MarkovGraph build_graph(const CallSequence& s, const Vocabulary& vocab, int k = 1);

enum class Propagation {
  kTransition,    // 0.5 * (M + M^T) + I over transition probabilities
  kSymmetricGcn,  // D^{-1/2} (A + I) D^{-1/2} over the binary adjacency
};

// Dense propagation matrix over present_nodes. Transition mode exchanges
// information bidirectionally with the transition probabilities and keeps a
// self-loop per node; directed=true keeps M + I instead (ablation).
Matrix normalize_adjacency(const MarkovGraph& g, Propagation mode, bool directed = false);

// Graphviz rendering. Edge labels carry probabilities to 4 decimals; when
// node_weights (size |vocab|, values in [0, 1]) is given, node fill intensity
// scales with the weight of that call.
std::string to_dot(const MarkovGraph& g, const Vocabulary& vocab,
                   const std::optional<std::vector<double>>& node_weights = std::nullopt);

// JSON dump: {"hash", "label", "k", "nodes": [names], "edges": [{src,dst,count,prob}]}.
std::string graph_to_json(const MarkovGraph& g, const Vocabulary& vocab);

}  // namespace awgcn
