#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace nodelift {

/// Splits [0, total) into `jobs` contiguous ranges and calls fn(begin, end, worker)
/// for each, on separate threads when jobs > 1. The first exception is rethrown.
template <class Fn>
void parallel_ranges(std::uint64_t total, unsigned jobs, Fn&& fn)
{
    jobs = std::max(1u, jobs);
    if (jobs == 1 || total < jobs) {
        fn(std::uint64_t{0}, total, 0u);
        return;
    }
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(jobs);
    const std::uint64_t chunk = (total + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
        std::uint64_t b = std::min(total, chunk * w);
        std::uint64_t e = std::min(total, b + chunk);
        threads.emplace_back([&, b, e, w] {
            try {
                fn(b, e, w);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads)
        t.join();
    for (auto& err : errors)
        if (err)
            std::rethrow_exception(err);
}

} // namespace nodelift
