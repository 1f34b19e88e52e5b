#pragma once

/** \file parallel.hpp
 *
 *  \brief Index-ordered parallel map. Workers pull indices from a shared counter; results land in
 *         their own slot, so the output order never depends on completion order.
 */

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace godel {

/// Worker count: an explicit positive request wins, then GODEL_C60_JOBS, then the hardware.
int resolve_jobs(int requested);

template <class F>
auto
parallel_map(std::size_t count, int jobs, F&& f) -> std::vector<std::invoke_result_t<F&, std::size_t>>
{
    using R = std::invoke_result_t<F&, std::size_t>;
    std::vector<std::optional<R>> slots(count);

    std::size_t const workers = std::min<std::size_t>(std::max(1, jobs), std::max<std::size_t>(count, 1));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;

    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                slots[i].emplace(f(i));
            } catch (...) {
                std::lock_guard<std::mutex> g(failure_lock);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = count;
            }
        }
    };

    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    std::vector<R> out;
    out.reserve(count);
    for (auto& s : slots) {
        out.push_back(std::move(*s));
    }
    return out;
}

} // namespace godel
