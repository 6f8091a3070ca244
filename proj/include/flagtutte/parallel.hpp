#ifndef FLAGTUTTE_PARALLEL_HPP
#define FLAGTUTTE_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace flagtutte {

namespace detail {
inline std::atomic<int>& thread_setting() {
    static std::atomic<int> value{0};
    return value;
}
}  // namespace detail

/// Worker count for library loops; 0 means "use FLAGTUTTE_THREADS or hardware concurrency".
inline void set_threads(int n) { detail::thread_setting().store(std::max(0, n)); }

inline int threads() {
    int n = detail::thread_setting().load();
    if (n > 0) return n;
    if (const char* env = std::getenv("FLAGTUTTE_THREADS")) {
        int e = std::atoi(env);
        if (e > 0) return e;
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

/// Runs body(i) for i in [0, count) over contiguous chunks. Results must be
/// written to per-index slots so the outcome does not depend on scheduling.
template <class F>
void parallel_for(std::size_t count, F&& body, int workers = threads()) {
    const std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(std::max(1, workers)), count);
    if (w <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    const std::size_t chunk = (count + w - 1) / w;
    for (std::size_t t = 0; t < w; ++t) {
        const std::size_t lo = t * chunk, hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace flagtutte

#endif  // FLAGTUTTE_PARALLEL_HPP
