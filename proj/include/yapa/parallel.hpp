#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace yapa {

/// Runs fn(i) for i in [0, total) on a small worker pool. Tasks must be
/// independent (each writes only its own output slot / owns its own RNG).
template <typename Fn>
void parallel_for(std::uint64_t total, Fn&& fn, unsigned n_threads = 0) {
    if (n_threads == 0) n_threads = std::max(1u, std::thread::hardware_concurrency());
    if (n_threads == 1 || total <= 1) {
        for (std::uint64_t i = 0; i < total; ++i) fn(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) {
        workers.emplace_back([&] {
            for (;;) {
                const std::uint64_t i = next.fetch_add(1);
                if (i >= total) return;
                fn(i);
            }
        });
    }
    for (auto& w : workers) w.join();
}

}  // namespace yapa
