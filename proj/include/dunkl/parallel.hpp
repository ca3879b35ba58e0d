#ifndef DUNKL_PARALLEL_HPP
#define DUNKL_PARALLEL_HPP

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dunkl {

/// Process-wide thread cap for the parallel kernels (the CLI --jobs flag
/// lands here).  All kernels produce results independent of the thread
/// count: arithmetic is exact and aggregation orders are canonical.
int max_threads();
void set_max_threads(int n);  // n >= 1; n = 0 restores the hardware default

/// Calls fn(i) for every i in [0, n), distributing iterations over up to
/// `jobs` threads (jobs = 0 means the global setting).  fn must write only
/// to per-index slots.
template <class Fn>
void parallel_for(std::size_t n, int jobs, Fn&& fn) {
    if (jobs <= 0) jobs = max_threads();
#ifdef _OPENMP
    if (jobs > 1 && n > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            fn(static_cast<std::size_t>(i));
        return;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

/// Splits [0, n) into `pieces` contiguous chunks and calls
/// fn(chunk_index, begin, end) for each, in parallel when possible.
/// Returns the number of chunks actually used.
template <class Fn>
std::size_t parallel_chunks(std::size_t n, int jobs, Fn&& fn) {
    if (jobs <= 0) jobs = max_threads();
    std::size_t pieces = static_cast<std::size_t>(jobs);
    if (pieces > n) pieces = n;
    if (pieces == 0) return 0;
    const std::size_t step = (n + pieces - 1) / pieces;
#ifdef _OPENMP
    if (pieces > 1) {
#pragma omp parallel for schedule(static) num_threads(static_cast<int>(pieces))
        for (long long c = 0; c < static_cast<long long>(pieces); ++c) {
            const std::size_t b = static_cast<std::size_t>(c) * step;
            const std::size_t e = b + step < n ? b + step : n;
            fn(static_cast<std::size_t>(c), b, e);
        }
        return pieces;
    }
#endif
    for (std::size_t c = 0; c < pieces; ++c) {
        const std::size_t b = c * step;
        const std::size_t e = b + step < n ? b + step : n;
        fn(c, b, e);
    }
    return pieces;
}

}  // namespace dunkl

#endif
