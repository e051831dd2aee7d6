#pragma once

#include <exception>
#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace starcoef {

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Runs body(i) for i in [0, count). threads == 1 takes the plain serial
/// loop, the reference path kept for testing; threads == 0 uses all cores.
/// Bodies must write results into per-index slots so output is independent
/// of scheduling. Exceptions are rethrown after the loop, lowest index first.
inline void parallel_for_index(int count, int threads, const std::function<void(int)>& body) {
  if (count <= 0) return;
  const int t = threads == 0 ? hardware_threads() : threads;
#ifdef _OPENMP
  if (t > 1 && count > 1) {
    std::vector<std::exception_ptr> errors(static_cast<size_t>(count));
#pragma omp parallel for schedule(dynamic) num_threads(t)
    for (int i = 0; i < count; ++i) {
      try {
        body(i);
      } catch (...) {
        errors[static_cast<size_t>(i)] = std::current_exception();
      }
    }
    for (const std::exception_ptr& e : errors)
      if (e) std::rethrow_exception(e);
    return;
  }
#endif
  for (int i = 0; i < count; ++i) body(i);
}

}  // namespace starcoef
