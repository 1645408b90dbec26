#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace sphdyn {

// Worker count: SPHDYN_WORKERS env var, else hardware concurrency.
inline int worker_count() {
    if (const char* env = std::getenv("SPHDYN_WORKERS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// Evaluates fn(i) for i in [0, n) into a vector. Each slot is written by
// exactly one thread, so the result is identical for any worker count.
template <typename T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn) {
    std::vector<T> out(n);
    const int workers = worker_count();
    if (workers <= 1 || n < 256) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&, w]() {
            for (std::size_t i = static_cast<std::size_t>(w); i < n;
                 i += static_cast<std::size_t>(workers)) {
                out[i] = fn(i);
            }
        });
    }
    for (auto& t : threads) t.join();
    return out;
}

}  // namespace sphdyn
