#ifndef ARITHSURF_PARALLEL_HPP
#define ARITHSURF_PARALLEL_HPP

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace arithsurf {

/// Worker count from ARITHSURF_WORKERS, defaulting to 1.
inline unsigned workers_from_env() {
  if (const char* env = std::getenv("ARITHSURF_WORKERS")) {
    int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return 1;
}

/// Runs body(i) for i in [begin, end) on `workers` threads with a strided
/// split. Callers merge per-index results themselves so output order never
/// depends on scheduling.
template <typename Body>
void parallel_for(long begin, long end, unsigned workers, Body body) {
  if (workers <= 1 || end - begin < 2) {
    for (long i = begin; i < end; ++i) body(i);
    return;
  }
  workers = static_cast<unsigned>(std::min<long>(workers, end - begin));
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (long i = begin + w; i < end; i += workers) body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace arithsurf

#endif  // ARITHSURF_PARALLEL_HPP
