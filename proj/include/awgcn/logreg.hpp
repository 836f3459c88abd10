#pragma once

#include <vector>

#include "awgcn/matrix.hpp"

namespace awgcn {

struct LogRegOptions {
  double l2 = 1e-4;        // weight decay on w (not bias)
  double grad_tol = 1e-6;  // stop when the full gradient L2 norm drops below
  int max_iters = 5000;
};

struct LogRegModel {
  Matrix w;                  // d x C
  std::vector<double> bias;  // C
  int num_classes = 0;
};

// Multinomial logistic regression trained by full-batch gradient descent with
// backtracking line search. Deterministic (zero init, convex objective).
LogRegModel logreg_fit(const Matrix& features, const std::vector<int>& labels,
                       int num_classes, const LogRegOptions& options = {});

std::vector<int> logreg_predict(const LogRegModel& model, const Matrix& features);

// Per-class probabilities, n x C.
Matrix logreg_scores(const LogRegModel& model, const Matrix& features);

// Mean cross-entropy plus 0.5 * l2 * ||w||^2; exposed for gradient checking.
double logreg_loss(const LogRegModel& model, const Matrix& features,
                   const std::vector<int>& labels, double l2);
void logreg_grad(const LogRegModel& model, const Matrix& features,
                 const std::vector<int>& labels, double l2, Matrix& grad_w,
                 std::vector<double>& grad_bias);

}  // namespace awgcn
