#pragma once

#include <cstddef>

namespace dunkl::par {

// Worker cap: min(OMP max threads, DUNKL_THREADS when set).
int max_threads();

// Data-parallel loop over [0, n).  Every hot kernel in the library runs
// through this and has a serial twin (parallel = false) kept for
// testing and benchmarking.
template <class F> void for_range(std::size_t n, bool parallel, F&& body);

namespace detail {
void run_parallel(std::size_t n, void* ctx, void (*trampoline)(void*, std::size_t));
}

template <class F> void for_range(std::size_t n, bool parallel, F&& body) {
    if (!parallel || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    detail::run_parallel(n, &body, [](void* ctx, std::size_t i) {
        (*static_cast<F*>(ctx))(i);
    });
}

} // namespace dunkl::par
