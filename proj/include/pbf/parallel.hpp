#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace pbf {

// Run fn(i) for i in [0, count). Work items must be independent; callers get
// determinism by writing results into slot i. threads == 0 picks the hardware
// concurrency.
inline void parallel_for(std::size_t count, unsigned threads,
                         const std::function<void(std::size_t)> &fn) {
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    if (threads > count) threads = static_cast<unsigned>(count);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto &t : pool) t.join();
}

} // namespace pbf
