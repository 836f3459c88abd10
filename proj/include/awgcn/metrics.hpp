#pragma once

#include <optional>
#include <string>
#include <vector>

#include "awgcn/matrix.hpp"

namespace awgcn {

struct EvalReport {
  double accuracy = 0.0;
  double macro_f1 = 0.0;
  std::optional<double> macro_auc;     // absent when undefined (single-class test)
  std::optional<double> weighted_auc;  // support-weighted variant, reported alongside

  struct PerClass {
    std::string label;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    long support = 0;
    std::optional<double> auc;
  };
  std::vector<PerClass> per_class;
  std::vector<std::vector<long>> confusion;  // confusion[truth][pred]
  long num_samples = 0;

  std::string to_json() const;
  std::string confusion_csv() const;
};

// truth/pred hold class indices into labels; scores is num_samples x C with
// per-class probabilities (used for one-vs-rest AUC). Verifies the
// trace-over-total accuracy identity on every call.
EvalReport compute_metrics(const std::vector<int>& truth, const std::vector<int>& pred,
                           const Matrix& scores, const std::vector<std::string>& labels);

// One-vs-rest AUC for one class via the rank statistic (average ranks on
// ties). Returns nullopt when either side is empty.
std::optional<double> binary_auc(const std::vector<double>& scores,
                                 const std::vector<bool>& positive);

}  // namespace awgcn
