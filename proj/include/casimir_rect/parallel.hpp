#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace casimir_rect {

/// Execution policy for the data-parallel kernels. The serial path is the
/// reference implementation; both paths produce bit-identical results
/// because reductions always happen afterwards, in index order.
enum class Exec { serial, parallel };

/// Evaluates fn(i) for i in [0, n) and stores the results in index order.
/// Exceptions thrown inside a worker are rethrown on the calling thread.
template <typename T, typename Fn>
std::vector<T> map_indexed(std::size_t n, Fn&& fn, Exec exec = Exec::parallel)
{
    std::vector<T> out(n);
    if (exec == Exec::serial || n < 2) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

/// Caps the OpenMP team size from CASIMIR_RECT_THREADS when set.
void configure_threads_from_env();

int max_threads();

}  // namespace casimir_rect
