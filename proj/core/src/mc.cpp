#include "sheetcurrent/mc.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "sheetcurrent/rng.hpp"

namespace sheetcurrent {

namespace {

/// Fixed-shape pairwise reduction: the result depends only on the array
/// contents, never on how replicas were scheduled across threads.
template <typename R, typename T, typename F>
R tree_reduce(const std::vector<T>& v, std::size_t lo, std::size_t hi, const F& leaf) {
    if (hi - lo <= 8) {
        R acc{};
        for (std::size_t k = lo; k < hi; ++k) acc += leaf(v[k]);
        return acc;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return tree_reduce<R>(v, lo, mid, leaf) + tree_reduce<R>(v, mid, hi, leaf);
}

}  // namespace

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SHEETCURRENT_THREADS")) {
        char* end = nullptr;
        const unsigned long parsed = std::strtoul(env, &end, 10);
        if (end != env && parsed > 0) return static_cast<unsigned>(parsed);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

EstimatorResult estimate_replicated(
    std::uint64_t replicas, std::uint64_t master_seed, unsigned threads,
    const std::function<std::complex<double>(std::uint64_t, std::uint64_t)>& fn) {
    if (replicas < 2) throw std::invalid_argument("estimate_replicated: need at least 2 replicas");
    const unsigned workers = static_cast<unsigned>(
        std::min<std::uint64_t>(std::max(1u, threads), replicas));

    std::vector<std::complex<double>> values(replicas);

    if (workers == 1) {
        for (std::uint64_t k = 0; k < replicas; ++k) values[k] = fn(k, derive_seed(master_seed, k));
    } else {
        std::atomic<std::uint64_t> next{0};
        std::exception_ptr first_error;
        std::mutex error_mu;
        auto work = [&]() {
            try {
                for (;;) {
                    const std::uint64_t k = next.fetch_add(1, std::memory_order_relaxed);
                    if (k >= replicas) return;
                    values[k] = fn(k, derive_seed(master_seed, k));
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!first_error) first_error = std::current_exception();
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    const std::complex<double> total = tree_reduce<std::complex<double>>(
        values, 0, values.size(), [](const std::complex<double>& v) { return v; });
    const std::complex<double> mean = total / static_cast<double>(replicas);
    const double sq = tree_reduce<double>(values, 0, values.size(),
                                          [&](const std::complex<double>& v) { return std::norm(v - mean); });

    EstimatorResult res;
    res.mean = mean;
    res.std_error = std::sqrt(sq / (static_cast<double>(replicas - 1) * static_cast<double>(replicas)));
    res.replicas = replicas;
    res.seed = master_seed;
    return res;
}

}  // namespace sheetcurrent
