#include "awgcn/adam.hpp"

#include <cmath>

#include "awgcn/error.hpp"

namespace awgcn {

AdamState AdamState::make(const std::vector<size_t>& tensor_sizes) {
  AdamState state;
  state.slots.reserve(tensor_sizes.size());
  for (size_t size : tensor_sizes) {
    state.slots.push_back({std::vector<double>(size, 0.0), std::vector<double>(size, 0.0)});
  }
  return state;
}

void adam_update_tensor(std::span<double> params, std::span<const double> grads,
                        AdamState::Slot& slot, uint64_t t, double lr,
                        double beta1, double beta2, double eps) {
  if (params.size() != grads.size() || params.size() != slot.m.size() ||
      params.size() != slot.v.size()) {
    throw Error(ErrorCode::ShapeMismatch, "adam tensor/accumulator size mismatch");
  }
  const double bc1 = 1.0 - std::pow(beta1, static_cast<double>(t));
  const double bc2 = 1.0 - std::pow(beta2, static_cast<double>(t));
  for (size_t i = 0; i < params.size(); ++i) {
    const double g = grads[i];
    slot.m[i] = beta1 * slot.m[i] + (1.0 - beta1) * g;
    slot.v[i] = beta2 * slot.v[i] + (1.0 - beta2) * g * g;
    const double m_hat = slot.m[i] / bc1;
    const double v_hat = slot.v[i] / bc2;
    params[i] -= lr * m_hat / (std::sqrt(v_hat) + eps);
  }
}

void adam_step(const std::vector<std::span<double>>& params,
               const std::vector<std::span<const double>>& grads,
               AdamState& state, double lr) {
  if (params.size() != grads.size() || params.size() != state.slots.size()) {
    throw Error(ErrorCode::ShapeMismatch, "adam tensor count mismatch");
  }
  ++state.step;
  for (size_t i = 0; i < params.size(); ++i) {
    adam_update_tensor(params[i], grads[i], state.slots[i], state.step, lr,
                       state.beta1, state.beta2, state.eps);
  }
}

void sgd_step(const std::vector<std::span<double>>& params,
              const std::vector<std::span<const double>>& grads, double lr) {
  if (params.size() != grads.size()) {
    throw Error(ErrorCode::ShapeMismatch, "sgd tensor count mismatch");
  }
  for (size_t i = 0; i < params.size(); ++i) {
    if (params[i].size() != grads[i].size()) {
      throw Error(ErrorCode::ShapeMismatch, "sgd tensor size mismatch");
    }
    for (size_t j = 0; j < params[i].size(); ++j) params[i][j] -= lr * grads[i][j];
  }
}

}  // namespace awgcn
