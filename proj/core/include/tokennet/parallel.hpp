#pragma once

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace tokennet {

/// Resolves a user-facing thread count: 0 means "use the hardware", anything
/// else is taken as given (values above the task count are harmless).
inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(k) for every k in [0, count) on up to n_threads workers. Work is
/// assigned by index (contiguous blocks), and fn must write only state owned
/// by its own k, so results are independent of worker count and completion
/// order. Downstream aggregation stays deterministic as long as it consumes
/// results in index order. The first worker exception, if any, is rethrown.
template <typename Fn>
void parallel_for_indexed(int count, int n_threads, Fn&& fn) {
    if (count <= 0) return;
    n_threads = std::min(resolve_threads(n_threads), count);
    if (n_threads <= 1) {
        for (int k = 0; k < count; ++k) fn(k);
        return;
    }

    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(n_threads));
    std::exception_ptr first_error;
    std::mutex error_mutex;

    const int base = count / n_threads;
    const int extra = count % n_threads;
    int begin = 0;
    for (int w = 0; w < n_threads; ++w) {
        const int len = base + (w < extra ? 1 : 0);
        const int end = begin + len;
        workers.emplace_back([&fn, &first_error, &error_mutex, begin, end] {
            try {
                for (int k = begin; k < end; ++k) fn(k);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
        begin = end;
    }
    for (std::thread& worker : workers) worker.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace tokennet
