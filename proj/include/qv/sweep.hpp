#pragma once

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qv {

// Index-addressed parallel map: out[i] = fn(i). Results are position-stable,
// so any schedule yields the same vector as the serial reference below.
template <class R, class Fn>
std::vector<R> parallel_map(std::size_t n, Fn fn, int jobs) {
    std::vector<R> out(n);
    (void)jobs;
#ifdef _OPENMP
    if (jobs > 1 && n > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
        for (long i = 0; i < static_cast<long>(n); ++i)
            out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
        return out;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
}

// Serial reference for the parallel map; kept separate so the two can be
// compared directly in tests and benchmarks.
template <class R, class Fn>
std::vector<R> serial_map(std::size_t n, Fn fn) {
    std::vector<R> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
}

inline int default_jobs() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace qv
