#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace nwd {

/// Runs f(i) for i in [0, n) on up to `jobs` threads. Each index is handed
/// out exactly once; callers write results into per-index slots so the
/// outcome is identical at any parallelism degree.
template <typename F>
void parallel_for_indexed(std::size_t n, int jobs, F&& f) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
        threads.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                f(i);
            }
        });
    }
    for (auto& thread : threads) thread.join();
}

} // namespace nwd
