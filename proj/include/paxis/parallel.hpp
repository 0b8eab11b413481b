#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace paxis {

/**
 * Calls fn(i) for every i in [0, count) on up to `threads` workers.
 * Indices are handed out dynamically; fn must only write state owned by i.
 * The first exception thrown by any worker is rethrown on the caller.
 */
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(threads, 1u), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                try {
                    for (std::size_t i = next++; i < count; i = next++) fn(i);
                } catch (...) {
                    std::lock_guard guard(failure_lock);
                    if (!failure) failure = std::current_exception();
                    next = count;
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace paxis
