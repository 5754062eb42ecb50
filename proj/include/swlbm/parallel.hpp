#pragma once

#include <atomic>
#include <cstddef>
#include <limits>

namespace swlbm {

/// Static-schedule loop over [0, n). Each index is processed by exactly one
/// thread and results must not depend on the partition.
template <class Body>
void parallel_for(std::size_t n, int threads, Body&& body) {
  const long count = static_cast<long>(n);
#ifdef _OPENMP
  if (threads > 1) {
#pragma omp parallel for num_threads(threads) schedule(static)
    for (long i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)threads;
#endif
  for (long i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
}

/// Lowest index reported from inside a parallel loop.
class FirstFailure {
 public:
  void report(std::size_t index) {
    std::size_t current = first_.load(std::memory_order_relaxed);
    while (index < current && !first_.compare_exchange_weak(current, index, std::memory_order_relaxed)) {
    }
  }
  bool failed() const { return first_.load() != kNone; }
  std::size_t index() const { return first_.load(); }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> first_{kNone};
};

}  // namespace swlbm
