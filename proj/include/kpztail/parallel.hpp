#ifndef KPZTAIL_PARALLEL_HPP
#define KPZTAIL_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace kpztail {

// Thread cap: KPZTAIL_THREADS if set, otherwise hardware concurrency.
inline unsigned max_threads() {
    if (const char* env = std::getenv("KPZTAIL_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Static row partition; body(i) must be independent across i.
template <typename Body>
void parallel_for(std::size_t count, Body&& body) {
    unsigned nt = max_threads();
    if (nt <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    if (nt > count) nt = static_cast<unsigned>(count);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    std::exception_ptr error;
    std::atomic_flag error_set = ATOMIC_FLAG_INIT;
    for (unsigned t = 0; t < nt; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < count; i += nt) body(i);
            } catch (...) {
                if (!error_set.test_and_set()) error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace kpztail

#endif
