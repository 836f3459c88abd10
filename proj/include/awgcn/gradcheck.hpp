#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace awgcn {

// One tensor to verify: data is mutated in place during probing and restored
// afterwards; analytic points at the gradient to compare against.
struct GradCheckTensor {
  std::string name;
  double* data = nullptr;
  size_t size = 0;
  const double* analytic = nullptr;
};

struct GradCheckReport {
  struct Entry {
    std::string name;
    double max_rel_err = 0.0;
    size_t coords_checked = 0;
    bool pass = false;
  };
  std::vector<Entry> tensors;
  double h = 0.0;
  double tol = 0.0;
  bool pass = false;

  double max_rel_err() const;
};

// Central finite differences on a seeded random sub-sample of coordinates
// (min(sample_per_tensor, size) per tensor). loss must be deterministic;
// two differing evaluations at the same point raise NonDeterministicLoss.
GradCheckReport finite_diff_check(const std::function<double()>& loss,
                                  const std::vector<GradCheckTensor>& tensors,
                                  double h, double tol, uint64_t seed,
                                  size_t sample_per_tensor = 50);

}  // namespace awgcn
