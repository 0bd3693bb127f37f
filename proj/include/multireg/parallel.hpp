#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace multireg {

inline bool openmp_available() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

/// threads <= 0 means the OpenMP default.
inline int resolve_threads(int threads) {
#ifdef _OPENMP
  return threads > 0 ? threads : omp_get_max_threads();
#else
  (void)threads;
  return 1;
#endif
}

/// Runs f(i) for i in [0, n). The first exception thrown by any f is rethrown
/// after the loop.
template <class F>
void parallel_for(std::size_t n, int threads, F&& f) {
  const int nt = resolve_threads(threads);
  if (nt <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::exception_ptr err;
  std::mutex mu;
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
  for (long i = 0; i < long(n); ++i) {
    try {
      f(std::size_t(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

} // namespace multireg
