#include <algorithm>
#include <atomic>
#include <mutex>
#include <omp.h>

#include "sweep.hpp"

namespace levelone::detail {

  std::optional<Violation> run_omp(Sweep const& sweep) {
    long const               count = static_cast<long>(sweep.outer_count());
    std::atomic<long>        best{count};
    std::optional<Violation> found;
    std::mutex               lock;
    // Outer counts reach |M|^2; one index per chunk would spend most of the
    // time in the scheduler.
    long const chunk = std::clamp(count / (64L * omp_get_max_threads()), 1L, 256L);

#pragma omp parallel
    {
      auto cursor = sweep.cursor();
#pragma omp for schedule(dynamic, chunk)
      for (long k = 0; k < count; ++k) {
        // Anything past the best index found so far cannot win.
        if (k >= best.load(std::memory_order_relaxed)) {
          continue;
        }
        if (auto v = cursor->scan(static_cast<std::size_t>(k))) {
          std::lock_guard guard(lock);
          if (k < best.load()) {
            best.store(k);
            found = std::move(v);
          }
        }
      }
    }
    return found;
  }

}  // namespace levelone::detail
