#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "awgcn/graph.hpp"
#include "awgcn/matrix.hpp"
#include "awgcn/rng.hpp"

namespace awgcn {

struct AwgcnConfig {
  int vocab_size = 0;                     // d
  std::array<int, 3> dims = {128, 256, 64};  // k1, k2, k3
  int num_classes = 2;                    // C; C == 1 selects the sigmoid head
  double dropout = 0.35;
  double lr = 0.005;
  Propagation propagation = Propagation::kTransition;
  bool directed = false;
  int kgram = 1;
  uint64_t seed = 0;

  void validate() const;
};

// Trainable tensors. fa acts as a diagonal per-call scale on the one-hot
// features; aa is one global call-pair attention shared across graphs and
// layers; w0..w2 are the three convolution weights; dense + bias form the
// classification head. Convolutions carry no bias.
struct AwgcnParams {
  std::vector<double> fa;  // d
  Matrix aa;               // d x d
  Matrix w0;               // d x k1
  Matrix w1;               // k1 x k2
  Matrix w2;               // k2 x k3
  Matrix dense;            // k3 x C
  std::vector<double> bias;  // C

  // Seeded init: fa and aa uniform on [0.9, 1.1] (near-neutral attention),
  // weights symmetric uniform scaled by 1/sqrt(fan-in), bias zero.
  static AwgcnParams init(const AwgcnConfig& config);
  static AwgcnParams zeros_like(const AwgcnParams& other);

  void add_scaled(const AwgcnParams& other, double s);
  void set_zero();
  std::vector<size_t> tensor_sizes() const;
};

// Per-graph activations kept for the backward pass.
struct ForwardTrace {
  std::vector<int> tokens;  // present vocabulary indices, ascending
  Matrix p0;                // propagation matrix before attention
  Matrix p;                 // aa-restricted hadamard with p0
  Matrix b0, b1, b2;        // H_l * W_l products
  Matrix s1, s2, s3;        // pre-activations P * b_l
  Matrix h1, h2, h3;        // ReLU outputs
  std::vector<double> z;          // mean-pooled latent, length k3
  std::vector<double> drop_mask;  // inverted-dropout factors over z
  std::vector<double> z_dropped;
  std::vector<double> logits;
  std::vector<double> probs;
  double loss = 0.0;
  int label_index = -1;
  bool train_mode = false;
};

// Forward pass over one graph. label_index < 0 skips the loss (embedding /
// inference use). dropout_rng is only consulted in train mode with p > 0.
ForwardTrace forward(const MarkovGraph& g, const AwgcnParams& params,
                     const AwgcnConfig& config, bool train_mode,
                     int label_index, Rng* dropout_rng = nullptr);

// Accumulates exact analytic gradients of trace.loss into grads.
void backward(const ForwardTrace& trace, const MarkovGraph& g,
              const AwgcnParams& params, const AwgcnConfig& config,
              AwgcnParams& grads);

// Dropout-free pooled latent (length k3).
std::vector<double> embed(const MarkovGraph& g, const AwgcnParams& params,
                          const AwgcnConfig& config);

struct AttentionReport {
  // Per-call weight: |fa| min-max normalized to [0, 1] over the vocabulary.
  std::vector<double> node_weights;
  struct EdgeWeight {
    int src;
    int dst;
    double weight;  // raw aa[src][dst]
  };
  std::vector<EdgeWeight> edge_weights;
};

// Node weights always cover the whole vocabulary; edge weights are restricted
// to g's edges when a graph is given, otherwise all call pairs are reported.
AttentionReport attention_report(const AwgcnParams& params, const Vocabulary& vocab,
                                 const MarkovGraph* g = nullptr);

}  // namespace awgcn
