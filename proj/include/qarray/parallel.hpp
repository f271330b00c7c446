// parallel.hpp — deterministic fork-join helper for embarrassingly parallel grids
#pragma once

#include <algorithm>
#include <mutex>
#include <cstdlib>
#include <cstddef>
#include <thread>
#include <vector>

namespace qarray {

// Worker count: QARRAY_THREADS if set (>0), else hardware concurrency.
inline unsigned thread_count() {
    if (const char* env = std::getenv("QARRAY_THREADS")) {
        const long v = std::atol(env);
        if (v > 0) return static_cast<unsigned>(std::min(v, 256L));
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// f(i) is called once for every i in [0, n); each index owns its output slot,
// so results are independent of scheduling. The first worker exception is
// rethrown after the join.
template <class F>
void parallel_for(std::size_t n, F&& f) {
    const unsigned workers = std::min<std::size_t>(thread_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr error;
    std::mutex error_mutex;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += workers) f(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace qarray
