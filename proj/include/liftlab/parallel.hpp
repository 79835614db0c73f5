#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace liftlab {

/// Execution policy for the parallel kernels.  threads == 0 uses the OpenMP
/// default; threads == 1 forces the plain serial loop.  Every kernel writes
/// each item into its own pre-sized slot, so results are independent of the
/// schedule and identical to the serial reference implementations.
struct Exec {
  int threads = 0;

  bool serial() const { return threads == 1; }
};

/// Run fn(i) for i in [0, count).  Exceptions thrown by workers are captured
/// and the first one (lowest index) is rethrown after the loop joins.
template <class Fn>
void parallel_for(std::size_t count, const Exec& ex, Fn&& fn) {
#ifdef _OPENMP
  if (!ex.serial() && count > 1) {
    std::exception_ptr first_error = nullptr;
    std::size_t first_index = count;
    std::mutex mu;
    int nthreads = ex.threads > 0 ? ex.threads : 0;
#pragma omp parallel for schedule(dynamic) num_threads(nthreads > 0 ? nthreads : omp_get_max_threads())
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
      try {
        fn(static_cast<std::size_t>(i));
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (static_cast<std::size_t>(i) < first_index) {
          first_index = static_cast<std::size_t>(i);
          first_error = std::current_exception();
        }
      }
    }
    if (first_error) std::rethrow_exception(first_error);
    return;
  }
#endif
  for (std::size_t i = 0; i < count; ++i) fn(i);
}

}  // namespace liftlab
