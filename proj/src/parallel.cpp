#include "awgcn/parallel.hpp"

#include <thread>
#include <vector>

namespace awgcn {

void parallel_for(size_t n, int workers, const std::function<void(size_t)>& fn) {
  if (n == 0) return;
  size_t w = workers <= 1 ? 1 : std::min<size_t>(static_cast<size_t>(workers), n);
  if (w == 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(w);
  for (size_t t = 0; t < w; ++t) {
    threads.emplace_back([&, t]() {
      for (size_t i = t; i < n; i += w) fn(i);
    });
  }
  for (auto& th : threads) th.join();
}

int default_workers() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace awgcn
