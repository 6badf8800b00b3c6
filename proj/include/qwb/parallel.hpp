#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qwb {

// Runs fn(i) for i in [0, n) on up to `threads` workers with static
// contiguous chunks. fn must write only to slot i. The first exception
// thrown is rethrown.
template <typename Fn>
void parallel_for(Eigen::Index n, int threads, Fn&& fn) {
    const Eigen::Index workers = std::clamp<Eigen::Index>(threads, 1, std::max<Eigen::Index>(n, 1));
    if (workers == 1) {
        for (Eigen::Index i = 0; i < n; ++i) fn(i);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    const Eigen::Index chunk = (n + workers - 1) / workers;
    for (Eigen::Index w = 0; w < workers; ++w) {
        const Eigen::Index begin = w * chunk;
        const Eigen::Index end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&, begin, end] {
            try {
                for (Eigen::Index i = begin; i < end; ++i) fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    pool.clear();
    if (error) std::rethrow_exception(error);
}

}  // namespace qwb
