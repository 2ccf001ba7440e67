#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace excessive {

// Run fn(i) for i in [0, count) on `workers` threads. Work is handed out by
// an atomic counter, so any partition of indices may land on any thread;
// callers that aggregate must collect into per-index slots (deterministic)
// rather than per-thread state. The first exception thrown is rethrown on
// the calling thread after everyone stops.
inline void parallel_for(int count, int workers,
                         const std::function<void(int)>& fn) {
    if (workers <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i)
            fn(i);
        return;
    }
    if (workers > count)
        workers = count;
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            while (!failed.load(std::memory_order_relaxed)) {
                int i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= count)
                    return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mu);
                    if (!err)
                        err = std::current_exception();
                    failed.store(true, std::memory_order_relaxed);
                    return;
                }
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (err)
        std::rethrow_exception(err);
}

}  // namespace excessive
