#pragma once

#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace lpfz {

/// Worker-thread cap: min(LPFZ_THREADS, hardware_concurrency), at least 1.
int max_threads();

/// Fixed-format float for CSV and report output (deterministic across runs).
std::string fmt_double(double x);

/// Evaluates fn(0..n-1) with results in index order. Work is split into
/// contiguous chunks over at most max_threads() threads; if any call throws,
/// the exception from the lowest index is rethrown. Reductions over the
/// returned vector stay deterministic regardless of the thread count.
template <class T, class F>
std::vector<T> parallel_map(int n, F&& fn) {
    std::vector<T> out(static_cast<size_t>(n > 0 ? n : 0));
    if (n <= 0) return out;
    const int workers = std::min(max_threads(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = fn(i);
        return out;
    }
    std::vector<std::exception_ptr> errs(static_cast<size_t>(n));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int wkr = 0; wkr < workers; ++wkr) {
        pool.emplace_back([&, wkr]() {
            for (int i = wkr; i < n; i += workers) {
                try {
                    out[static_cast<size_t>(i)] = fn(i);
                } catch (...) {
                    errs[static_cast<size_t>(i)] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    return out;
}

} // namespace lpfz
