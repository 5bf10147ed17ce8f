#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace nm::oracle {

/// Worker cap for the verification suites: NEWTON_MELLIN_THREADS when set
/// to a positive integer, otherwise the hardware concurrency (at least 1).
std::size_t thread_limit();

/// Runs body(i) for i in [0, count) on up to thread_limit() threads.
/// The first exception thrown by any call is rethrown after all workers
/// have stopped.
template <class Body>
void parallel_for(std::size_t count, Body&& body) {
    const std::size_t workers = std::min(thread_limit(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count && !failed; i = next++) {
                    try {
                        body(i);
                    } catch (...) {
                        const std::lock_guard lock(error_mutex);
                        if (!first_error) first_error = std::current_exception();
                        failed = true;
                    }
                }
            });
        }
    }
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace nm::oracle
