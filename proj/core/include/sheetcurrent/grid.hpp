#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sheetcurrent {

/// Rectangular partition of [0,1]^2.
///
/// Holds the node coordinates 0 = s_0 < s_1 < ... < s_N = 1 and
/// 0 = t_0 < t_1 < ... < t_M = 1. Cell (i,j) is [s_i, s_{i+1}] x [t_j, t_{j+1}].
class GridSpec {
public:
    /// Uniform N x M partition, s_i = i/N, t_j = j/M.
    static GridSpec uniform(std::size_t n_s, std::size_t n_t);

    /// Partition from explicit node vectors. Throws std::invalid_argument
    /// unless both are strictly increasing with endpoints exactly 0 and 1.
    static GridSpec from_nodes(std::vector<double> s_nodes, std::vector<double> t_nodes);

    std::size_t ns() const noexcept { return s_.size() - 1; }  ///< cell count in s
    std::size_t nt() const noexcept { return t_.size() - 1; }  ///< cell count in t

    double s(std::size_t i) const { return s_[i]; }
    double t(std::size_t j) const { return t_[j]; }
    double ds(std::size_t i) const { return s_[i + 1] - s_[i]; }
    double dt(std::size_t j) const { return t_[j + 1] - t_[j]; }

    std::span<const double> s_nodes() const noexcept { return s_; }
    std::span<const double> t_nodes() const noexcept { return t_; }

    bool operator==(const GridSpec&) const = default;

private:
    GridSpec(std::vector<double> s, std::vector<double> t)
        : s_(std::move(s)), t_(std::move(t)) {}

    std::vector<double> s_;
    std::vector<double> t_;
};

}  // namespace sheetcurrent
