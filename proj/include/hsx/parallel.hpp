#pragma once

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hsx {

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Static parallel loop over [0, n). Each iteration must be independent and
// write only to its own slots; that keeps every result bit-identical no
// matter how iterations are scheduled. threads == 0 means "library default".
template <typename Fn>
void parallel_for(std::int64_t n, Fn&& fn, int threads = 0) {
#ifdef _OPENMP
    const int t = threads > 0 ? threads : max_threads();
#pragma omp parallel for schedule(static) num_threads(t)
    for (std::int64_t i = 0; i < n; ++i) fn(static_cast<std::size_t>(i));
#else
    (void)threads;
    for (std::int64_t i = 0; i < n; ++i) fn(static_cast<std::size_t>(i));
#endif
}

// Dynamic variant for uneven work items (experiment grids, matrix cells).
template <typename Fn>
void parallel_for_dynamic(std::int64_t n, Fn&& fn, int threads = 0) {
#ifdef _OPENMP
    const int t = threads > 0 ? threads : max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(t)
    for (std::int64_t i = 0; i < n; ++i) fn(static_cast<std::size_t>(i));
#else
    (void)threads;
    for (std::int64_t i = 0; i < n; ++i) fn(static_cast<std::size_t>(i));
#endif
}

}  // namespace hsx
