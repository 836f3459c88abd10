#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "awgcn/dataset.hpp"
#include "awgcn/metrics.hpp"
#include "awgcn/model.hpp"

namespace awgcn {

struct SplitSpec {
  double ratio = 0.8;      // train fraction
  bool stratified = true;
  uint64_t seed = 0;
};

struct SplitResult {
  std::vector<size_t> train_indices;
  std::vector<size_t> test_indices;
};

// Disjoint partition of ds.sequences. Sequences flagged test-only always land
// in test; with stratification every label keeps at least one test sample or
// Error(LabelTooSmall) is raised.
SplitResult split(const Dataset& ds, const SplitSpec& spec);

// New dataset over the same vocabulary and label set.
Dataset subset(const Dataset& ds, const std::vector<size_t>& indices);

struct TrainOptions {
  int epochs = 200;
  int patience = 20;      // early stop after this many epochs without a new best loss
  int batch_size = 0;     // 0 = full-batch accumulation per optimizer step
  int workers = 1;
  bool use_sgd = false;   // ablation; Adam is the default
  int snapshot_every = 0; // invoke snapshot before epochs 0, N, 2N, ...
  std::function<void(int, const AwgcnParams&)> snapshot;
};

struct TrainResult {
  AwgcnParams params;
  std::vector<double> loss_curve;  // mean per-graph loss per epoch
  int epochs_run = 0;
};

// Seeded full training loop: shuffle, per-graph forward/backward, fixed-order
// gradient reduction, optimizer step. Throws Error(DivergedLoss) on NaN/Inf.
TrainResult train(const Dataset& train_ds, const AwgcnConfig& config,
                  const TrainOptions& options = {});

EvalReport evaluate(const Dataset& test_ds, const AwgcnParams& params,
                    const AwgcnConfig& config, int workers = 1);

// One latent row per sequence, in dataset order.
Matrix embed_all(const Dataset& ds, const AwgcnParams& params,
                 const AwgcnConfig& config, int workers = 1);

// Call-frequency features: counts over the vocabulary normalized by sequence
// length. The one-hot baseline representation for the classical models.
Matrix onehot_frequency_features(const Dataset& ds);

std::vector<int> label_indices(const Dataset& ds);

}  // namespace awgcn
