#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace rch {

// Worker count: RCH_THREADS when set, hardware concurrency otherwise.
inline int default_threads() {
    if (const char* env = std::getenv("RCH_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs f(0..n-1) across workers. Tasks must be independent; results written
// to caller-owned slots keep the outcome deterministic.
inline void parallel_for(size_t n, const std::function<void(size_t)>& f, int threads = 0) {
    if (threads <= 0) threads = default_threads();
    if (threads == 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex errMx;
    size_t nw = std::min<size_t>(threads, n);
    for (size_t w = 0; w < nw; ++w)
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> g(errMx);
                    if (!err) err = std::current_exception();
                    return;
                }
            }
        });
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace rch
