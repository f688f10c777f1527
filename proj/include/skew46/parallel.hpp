#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace skew46 {

// Worker count: SKEW46_THREADS when set, hardware concurrency otherwise.
inline int thread_count() {
    if (const char* env = std::getenv("SKEW46_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Runs fn(i) for i in [0, n) on a fixed chunk decomposition. The caller
// owns output placement (typically a pre-sized vector indexed by i), so
// results are deterministic regardless of the worker count.
template <class Fn>
void parallel_for(std::int64_t n, const Fn& fn) {
    int workers = thread_count();
    if (workers <= 1 || n < 2) {
        for (std::int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    std::int64_t chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        std::int64_t lo = w * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::int64_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace skew46
