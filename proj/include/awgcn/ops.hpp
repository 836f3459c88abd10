#pragma once

#include <cstdint>
#include <vector>

#include "awgcn/matrix.hpp"
#include "awgcn/rng.hpp"

namespace awgcn {

// Elementwise max(x, 0).
Matrix relu_forward(const Matrix& x);
std::vector<double> relu_forward(const std::vector<double>& x);

// Gates grad_out by the sign of the pre-activation: dx = grad_out * [pre > 0].
Matrix relu_backward(const Matrix& grad_out, const Matrix& pre_activation);

// Numerically stable softmax.
std::vector<double> softmax(const std::vector<double>& logits);

struct SoftmaxXentResult {
  double loss;
  std::vector<double> probs;
};

// Cross-entropy of softmax(logits) against a single true label.
SoftmaxXentResult softmax_xent_forward(const std::vector<double>& logits, int label);

// dL/dlogits = probs - onehot(label).
std::vector<double> softmax_xent_backward(const std::vector<double>& probs, int label);

struct SigmoidBceResult {
  double loss;
  double prob;
};

// Binary cross-entropy of sigmoid(logit) against target in {0, 1}.
SigmoidBceResult sigmoid_bce_forward(double logit, double target);

// dL/dlogit = prob - target.
double sigmoid_bce_backward(double prob, double target);

// Inverted dropout mask: each entry is 0 with probability p, else 1/(1-p),
// so evaluation needs no rescaling. p = 0 yields all ones.
std::vector<double> dropout_mask(Rng& rng, size_t n, double p);

}  // namespace awgcn
