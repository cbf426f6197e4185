// Deterministic parallel map over an index range: results land by index, so
// the output order is independent of thread scheduling.
#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace dualwell {

template <class F>
void parallel_for(std::size_t n, F&& fn) {
    if (n == 0) return;
    std::size_t workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (workers > n) workers = n;
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([w, workers, n, &fn] {
            for (std::size_t i = w; i < n; i += workers) fn(i);
        });
    }
}

}  // namespace dualwell
