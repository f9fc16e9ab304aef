#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace sheetcurrent {

/// Finalizer of the splitmix64 generator (Vigna). Bijective 64-bit mix.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Deterministic per-replica substream key. Distinct replicas of the same
/// master seed get decorrelated streams; the derivation is pure arithmetic,
/// so any replica can be generated on any thread in any order.
constexpr std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t replica) noexcept {
    return mix64(master_seed ^ mix64(replica + 0x9E3779B97F4A7C15ULL));
}

/// Counter-mode splitmix64 stream: value k is mix64(key + (k+1)*golden).
/// State is a single counter, so the draw sequence is a pure function of
/// (key, draw index) independent of scheduling.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t key) noexcept : state_(key) {}

    std::uint64_t next_u64() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    /// Uniform in (0,1]: 53-bit mantissa, never 0 (safe under log).
    double next_unit_open0() noexcept {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Uniform in [0,1).
    double next_unit() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

/// Standard normal stream via Box-Muller on a CounterRng.
class NormalStream {
public:
    explicit NormalStream(std::uint64_t key) noexcept : rng_(key) {}

    double next() noexcept {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = rng_.next_unit_open0();
        const double u2 = rng_.next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    CounterRng rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace sheetcurrent
