#include "entherm/parallel.hpp"

#include <cstdlib>
#include <thread>
#include <vector>

namespace entherm {

std::size_t worker_count() {
    if (const char* env = std::getenv("ENTHERM_THREADS")) {
        long n = std::atol(env);
        if (n >= 1) return static_cast<std::size_t>(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    std::size_t nw = worker_count();
    if (nw <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    if (nw > n) nw = n;
    std::vector<std::thread> threads;
    threads.reserve(nw);
    for (std::size_t w = 0; w < nw; ++w) {
        std::size_t lo = n * w / nw;
        std::size_t hi = n * (w + 1) / nw;
        threads.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : threads) t.join();
}

} // namespace entherm
