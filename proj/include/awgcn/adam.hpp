#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace awgcn {

// Adam optimizer state: one moment pair per parameter tensor plus a shared
// step counter. Accumulator shapes are fixed at init and must match the
// tensors they update.
struct AdamState {
  struct Slot {
    std::vector<double> m;  // first moment
    std::vector<double> v;  // second moment
  };

  std::vector<Slot> slots;
  uint64_t step = 0;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;

  static AdamState make(const std::vector<size_t>& tensor_sizes);
};

// One bias-corrected Adam update for a single tensor at step t (1-based).
void adam_update_tensor(std::span<double> params, std::span<const double> grads,
                        AdamState::Slot& slot, uint64_t t, double lr,
                        double beta1, double beta2, double eps);

// Applies one Adam step across all tensors; increments state.step.
// tensors[i] and grads[i] must have the size given to AdamState::make.
void adam_step(const std::vector<std::span<double>>& params,
               const std::vector<std::span<const double>>& grads,
               AdamState& state, double lr);

// Plain SGD step, kept for ablation runs.
void sgd_step(const std::vector<std::span<double>>& params,
              const std::vector<std::span<const double>>& grads, double lr);

}  // namespace awgcn
