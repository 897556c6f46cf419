#pragma once

#include <cstddef>

namespace lie {

/// Execution policy for the data-parallel kernels. Serial and parallel
/// variants compute bit-identical results (exact arithmetic, disjoint
/// writes); the serial path is kept as the reference implementation.
enum class Exec { serial, parallel };

inline Exec default_exec() {
#ifdef _OPENMP
  return Exec::parallel;
#else
  return Exec::serial;
#endif
}

/// Runs fn(i) for i in [0, count). Iterations must write disjoint state.
template <class F>
void parallel_for(Exec exec, std::size_t count, F&& fn) {
#ifdef _OPENMP
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (long long i = 0; i < static_cast<long long>(count); ++i)
      fn(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < count; ++i) fn(i);
}

}  // namespace lie
