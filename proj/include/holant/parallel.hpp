#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace holant {

/// Worker count used by the enumeration cores; 0 means hardware concurrency.
void set_threads(unsigned n);
unsigned threads();

/// Evaluates f(i) for i in [0, count) on up to threads() workers and returns
/// the results in index order. Callers reduce the results sequentially, so
/// the outcome does not depend on the worker count.
template <class F>
auto parallel_map(std::size_t count, F &&f) -> std::vector<decltype(f(std::size_t{}))>
{
    using R = decltype(f(std::size_t{}));
    std::vector<R> out(count);
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads(), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; i++) {
            out[i] = f(i);
        }
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) {
                return;
            }
            try {
                out[i] = f(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                next = count;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; t++) {
        pool.emplace_back(work);
    }
    for (auto &th : pool) {
        th.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return out;
}

}  // namespace holant
