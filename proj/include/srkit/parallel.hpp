#ifndef SRKIT_PARALLEL_HPP
#define SRKIT_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace srkit {

/// Worker count for jobs <= 0: the hardware concurrency (at least 1).
inline int resolve_jobs(int jobs)
{
    if (jobs > 0)
        return jobs;
    return std::max(1U, std::thread::hardware_concurrency());
}

/**
 * Calls fn(index, worker) for every index in [0, count), spread over
 * `jobs` threads that pull indices from a shared counter. The first
 * exception thrown by any call is rethrown after all workers finish.
 * Callers keep results deterministic by writing to per-index slots or by
 * merging per-worker accumulators with a commutative operation.
 */
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn)
{
    const int workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(resolve_jobs(jobs)), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i, 0);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = next++; i < count; i = next++)
                        fn(i, w);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                    next = count;
                }
            });
        }
    }
    if (error)
        std::rethrow_exception(error);
}

} // namespace srkit

#endif
