#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace reebdeco {

// REEBDECO_THREADS caps worker count; defaults to hardware concurrency.
inline unsigned thread_budget() {
    if (const char* env = std::getenv("REEBDECO_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Static block partition over [0, n). Each index is processed exactly once and
// must write only to its own output slot, so results are independent of the
// schedule and of the thread count.
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
    std::size_t threads = std::min<std::size_t>(thread_budget(), n);
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::size_t chunk = (n + threads - 1) / threads;
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
        std::size_t lo = t * chunk;
        std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back([lo, hi, &body] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& w : workers) w.join();
}

}  // namespace reebdeco
