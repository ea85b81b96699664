#pragma once

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace transvect {

/// Worker count: TRANSVECT_THREADS if set (clamped to at least 1), otherwise
/// the hardware concurrency.
inline unsigned thread_count() {
    if (const char* env = std::getenv("TRANSVECT_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1)
            return static_cast<unsigned>(v);
        return 1;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Index-parallel map with no shared mutable state: fn(i) writes only to its
/// own result slot, so results are deterministic regardless of scheduling.
template <class Fn>
void parallel_for(size_t n, Fn&& fn) {
    unsigned workers = thread_count();
    if (workers <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                fn(i);
        });
    for (auto& t : pool)
        t.join();
}

} // namespace transvect
