#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace flt {

// Worker count for `jobs` tasks; threads = 0 means hardware concurrency.
inline unsigned worker_count(unsigned threads, size_t jobs)
{
    unsigned t = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<size_t>(t, std::max<size_t>(jobs, 1)));
}

// Runs f(i) for every i < count on a fixed pool. Results must be written to
// per-index slots so the outcome does not depend on scheduling. The first
// exception thrown by any task is rethrown after all workers finish.
template <class F> void parallel_for(size_t count, unsigned threads, F f)
{
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex m;
    auto work = [&] {
        while (true) {
            size_t i = next++;
            if (i >= count) return;
            try {
                f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(m);
                if (!error) error = std::current_exception();
            }
        }
    };
    unsigned w = worker_count(threads, count);
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < w; ++i) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace flt
