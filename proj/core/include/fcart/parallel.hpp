#ifndef FCART_PARALLEL_HPP
#define FCART_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace fcart {

// Ordered parallel map: results land at their input index, so aggregation is
// deterministic regardless of scheduling.
template <typename R>
std::vector<R> parallel_map(std::size_t count, const std::function<R(std::size_t)>& fn,
                            unsigned max_threads = 0) {
    std::vector<R> results(count);
    if (count == 0) return results;
    unsigned hw = std::thread::hardware_concurrency();
    unsigned nthreads = max_threads ? max_threads : (hw ? hw : 1);
    if (nthreads > count) nthreads = unsigned(count);
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                results[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
    return results;
}

} // namespace fcart

#endif
