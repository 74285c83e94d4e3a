#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mcx {

// Runs fn(r) for r in [0, count). Each call must be independent and write
// only to its own slot of any shared output, keyed by r; results are then
// identical for any job count. jobs <= 1 runs inline.
template <typename Fn>
void run_replicas(std::size_t count, int jobs, Fn&& fn) {
    if (jobs <= 1 || count < 2) {
        for (std::size_t r = 0; r < count; ++r) fn(r);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr error;
    std::mutex error_mutex;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t r = w; r < count; r += workers) fn(r);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace mcx
