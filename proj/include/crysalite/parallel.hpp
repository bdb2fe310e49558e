#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace crysalite {

/// Worker cap: CRYSALITE_THREADS when set (must be a positive integer),
/// otherwise the hardware concurrency. Throws std::invalid_argument on a
/// malformed value.
std::size_t worker_count();

/// Runs body(i) for i in [0, count). Work items must be independent; results
/// must be written to per-index slots so the outcome does not depend on
/// scheduling. The first exception thrown by any item is rethrown.
template <class Body>
void parallel_for(std::size_t count, Body&& body) {
    const std::size_t workers = std::min(worker_count(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        body(i);
                    } catch (...) {
                        std::lock_guard lock(error_mutex);
                        if (!error) error = std::current_exception();
                        next = count;
                    }
                }
            });
        }
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace crysalite
