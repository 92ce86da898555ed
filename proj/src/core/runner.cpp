#include "core/runner.hpp"

#include <exception>
#include <mutex>
#include <thread>

#include "core/error.hpp"

namespace ng {

unsigned effective_jobs(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

std::vector<std::vector<Cell>> parallel_rows(std::uint64_t lo, std::uint64_t hi, unsigned jobs,
                                             const std::function<RowFn()>& make_row_fn) {
    if (hi < lo) return {};
    std::uint64_t count = hi - lo + 1;
    unsigned workers = effective_jobs(jobs);
    if (static_cast<std::uint64_t>(workers) > count) workers = static_cast<unsigned>(count);

    std::vector<std::vector<Cell>> out(count);
    if (workers <= 1) {
        RowFn fn = make_row_fn();
        for (std::uint64_t n = lo; n <= hi; ++n) out[n - lo] = fn(n);
        return out;
    }

    std::exception_ptr first_error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        // Contiguous chunk [a, b) of the index range for worker w.
        std::uint64_t a = lo + count * w / workers;
        std::uint64_t b = lo + count * (w + 1) / workers;
        pool.emplace_back([&, a, b]() {
            try {
                RowFn fn = make_row_fn();
                for (std::uint64_t n = a; n < b; ++n) out[n - lo] = fn(n);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

}  // namespace ng
