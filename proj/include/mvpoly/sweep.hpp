#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mvpoly {

enum class SweepMode { Serial, Parallel };

// Data-parallel index sweep.  fn(k) must write its result into a slot owned
// by index k; aggregation happens after the sweep, so output is identical in
// both modes.  The serial mode is the reference implementation the parallel
// kernel is benchmarked and tested against.
template <class F>
void sweep(std::size_t n, SweepMode mode, F&& fn) {
#ifdef _OPENMP
    if (mode == SweepMode::Parallel) {
        std::exception_ptr first;
        std::mutex guard;
#pragma omp parallel for schedule(dynamic)
        for (long long k = 0; k < static_cast<long long>(n); ++k) {
            try {
                fn(static_cast<std::size_t>(k));
            } catch (...) {
                std::lock_guard<std::mutex> lock(guard);
                if (!first) first = std::current_exception();
            }
        }
        if (first) std::rethrow_exception(first);
        return;
    }
#else
    (void)mode;
#endif
    for (std::size_t k = 0; k < n; ++k) fn(k);
}

} // namespace mvpoly
