#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace awgcn {

// Derives an independent stream seed from a master seed, a purpose tag and up
// to two indices. Every random decision in the pipeline draws from a stream
// seeded this way, so partial pipelines and parallel workers stay reproducible.
uint64_t mix_seed(uint64_t seed, std::string_view tag, uint64_t a = 0, uint64_t b = 0);

// mt19937_64 with portable draw helpers. The engine's output sequence is fully
// specified by the standard; std::uniform_*_distribution is not, so the
// mappings below are implemented by hand to keep artifacts byte-identical
// across compilers.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // Uniform in [0, n). n must be >= 1.
  uint64_t below(uint64_t n);

  // Uniform integer in [lo, hi] inclusive.
  int64_t range(int64_t lo, int64_t hi);

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01();

  // Uniform double in [lo, hi).
  double uniform(double lo, double hi);

  // Bernoulli(p).
  bool chance(double p) { return uniform01() < p; }

  // Fisher-Yates shuffle using below().
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace awgcn
