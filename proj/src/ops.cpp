#include "awgcn/ops.hpp"

#include <algorithm>
#include <cmath>

#include "awgcn/error.hpp"

namespace awgcn {

Matrix relu_forward(const Matrix& x) {
  Matrix y(x.rows(), x.cols());
  for (size_t i = 0; i < x.size(); ++i) y.data()[i] = x.data()[i] > 0.0 ? x.data()[i] : 0.0;
  return y;
}

std::vector<double> relu_forward(const std::vector<double>& x) {
  std::vector<double> y(x.size());
  for (size_t i = 0; i < x.size(); ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
  return y;
}

Matrix relu_backward(const Matrix& grad_out, const Matrix& pre_activation) {
  if (!grad_out.same_shape(pre_activation)) {
    throw Error(ErrorCode::ShapeMismatch, "relu_backward shape mismatch");
  }
  Matrix dx(grad_out.rows(), grad_out.cols());
  for (size_t i = 0; i < grad_out.size(); ++i) {
    dx.data()[i] = pre_activation.data()[i] > 0.0 ? grad_out.data()[i] : 0.0;
  }
  return dx;
}

std::vector<double> softmax(const std::vector<double>& logits) {
  double max_logit = *std::max_element(logits.begin(), logits.end());
  std::vector<double> probs(logits.size());
  double sum = 0.0;
  for (size_t i = 0; i < logits.size(); ++i) {
    probs[i] = std::exp(logits[i] - max_logit);
    sum += probs[i];
  }
  for (double& p : probs) p /= sum;
  return probs;
}

SoftmaxXentResult softmax_xent_forward(const std::vector<double>& logits, int label) {
  if (label < 0 || static_cast<size_t>(label) >= logits.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "softmax_xent label " + std::to_string(label) + " out of range");
  }
  double max_logit = *std::max_element(logits.begin(), logits.end());
  std::vector<double> probs(logits.size());
  double sum = 0.0;
  for (size_t i = 0; i < logits.size(); ++i) {
    probs[i] = std::exp(logits[i] - max_logit);
    sum += probs[i];
  }
  // loss = log(sum exp(l - max)) - (l_label - max); avoids log(prob) underflow
  double loss = std::log(sum) - (logits[label] - max_logit);
  for (double& p : probs) p /= sum;
  return {loss, std::move(probs)};
}

std::vector<double> softmax_xent_backward(const std::vector<double>& probs, int label) {
  std::vector<double> d = probs;
  d[label] -= 1.0;
  return d;
}

SigmoidBceResult sigmoidbce_forward_impl(double logit, double target) {
  // Stable form: log(1 + e^{-|x|}) + max(x, 0) - x*y
  double p = 1.0 / (1.0 + std::exp(-logit));
  double loss = std::log1p(std::exp(-std::abs(logit))) + std::max(logit, 0.0) - logit * target;
  return {loss, p};
}

SigmoidBceResult sigmoid_bce_forward(double logit, double target) {
  return sigmoidbce_forward_impl(logit, target);
}

double sigmoid_bce_backward(double prob, double target) { return prob - target; }

std::vector<double> dropout_mask(Rng& rng, size_t n, double p) {
  std::vector<double> mask(n, 1.0);
  if (p <= 0.0) return mask;
  const double keep_scale = 1.0 / (1.0 - p);
  for (size_t i = 0; i < n; ++i) {
    mask[i] = rng.uniform01() < p ? 0.0 : keep_scale;
  }
  return mask;
}

}  // namespace awgcn
