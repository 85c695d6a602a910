// Minimal index-sharded worker pool. Jobs are independent and write results
// by index, so output order never depends on scheduling.
#ifndef EIGENROOT_PARALLEL_HPP
#define EIGENROOT_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace eigenroot {

// Runs fn(i) for i in [0, count). threads == 0 picks the hardware count.
// The first exception thrown by any job is rethrown after all workers join.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn, unsigned threads = 0) {
    if (count == 0) return;
    unsigned want = threads != 0 ? threads : std::thread::hardware_concurrency();
    if (want == 0) want = 1;
    if (want > count) want = static_cast<unsigned>(count);

    if (want == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error = nullptr;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count || failed.load()) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(want);
    for (unsigned t = 0; t < want; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace eigenroot

#endif
