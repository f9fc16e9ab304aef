#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>

namespace sheetcurrent {

struct EstimatorResult {
    std::complex<double> mean{0.0, 0.0};
    double std_error = 0.0;
    std::uint64_t replicas = 0;
    std::uint64_t seed = 0;
    std::optional<double> exact_reference;
};

/// Number of worker threads: explicit request if > 0, else the
/// SHEETCURRENT_THREADS environment variable, else hardware concurrency.
unsigned resolve_threads(unsigned requested = 0);

/// Replica-averaged Monte Carlo estimate of fn. fn(replica_index,
/// replica_seed) must derive all randomness from replica_seed
/// (= derive_seed(master_seed, replica_index)), so the estimate is
/// bit-identical for any thread count: per-replica values land in a
/// replica-indexed array and are combined by a fixed pairwise-tree reduction.
/// std_error = sqrt( sum |v_k - mean|^2 / ((R-1) R) ), R >= 2 required.
EstimatorResult estimate_replicated(
    std::uint64_t replicas, std::uint64_t master_seed, unsigned threads,
    const std::function<std::complex<double>(std::uint64_t, std::uint64_t)>& fn);

}  // namespace sheetcurrent
