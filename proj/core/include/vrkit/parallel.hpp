#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace vrkit {

// worker-pool size: hardware concurrency, capped by the VRKIT_THREADS environment variable
inline unsigned worker_count() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* cap = std::getenv("VRKIT_THREADS")) {
        const long v = std::strtol(cap, nullptr, 10);
        if (v >= 1 && static_cast<unsigned>(v) < n) n = static_cast<unsigned>(v);
    }
    return n;
}

// run fn(i) for i in [0, n) on a worker pool; fn must derive all randomness from i
// so results are identical for any thread count; exceptions are rethrown on the caller
inline void parallel_for(uint64_t n, const std::function<void(uint64_t)>& fn) {
    const unsigned workers = worker_count();
    if (workers <= 1 || n <= 1) {
        for (uint64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<uint64_t> cursor{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (;;) {
                    const uint64_t i = cursor.fetch_add(1);
                    if (i >= n) return;
                    fn(i);
                }
            } catch (...) {
                errors[t] = std::current_exception();
                cursor.store(n);
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace vrkit
