#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace qtmoments {

/// Worker count from QTMOMENTS_JOBS, falling back to 1.
unsigned default_workers();

/// Runs work(i) for i in [0, units) on up to `workers` threads and returns the
/// results indexed by unit, so callers can merge in a fixed order.
template <class Result>
std::vector<Result> run_units(std::size_t units, unsigned workers,
                              const std::function<Result(std::size_t)>& work)
{
    std::vector<Result> results(units);
    if (workers <= 1 || units <= 1) {
        for (std::size_t i = 0; i < units; ++i) results[i] = work(i);
        return results;
    }
    std::vector<std::thread> pool;
    const std::size_t n = std::min<std::size_t>(workers, units);
    pool.reserve(n);
    for (std::size_t w = 0; w < n; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < units; i += n) results[i] = work(i);
        });
    }
    for (auto& th : pool) th.join();
    return results;
}

}  // namespace qtmoments
