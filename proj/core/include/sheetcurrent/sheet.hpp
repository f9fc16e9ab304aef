#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "sheetcurrent/grid.hpp"

namespace sheetcurrent {

inline constexpr std::size_t kDefaultMaxComponents = 8;

/// One realization of a d-component Brownian sheet sampled at the grid nodes.
/// Each component is centered Gaussian with Cov = min(s,s')*min(t,t') and
/// vanishes identically on the axes s=0 and t=0; distinct components are
/// independent. Values are exact in distribution at the nodes (cumulative
/// sums of independent rectangle increments, no interpolation error).
struct SheetPath {
    GridSpec grid;
    std::size_t components = 0;
    std::uint64_t seed = 0;          ///< the stream key that produced the draws
    std::vector<double> values;      ///< layout [component][i][j], (N+1)*(M+1) per component

    double value(std::size_t component, std::size_t i, std::size_t j) const {
        const std::size_t stride_j = grid.nt() + 1;
        const std::size_t per_comp = (grid.ns() + 1) * stride_j;
        return values[component * per_comp + i * stride_j + j];
    }

    /// W(s_{i+1}, t_j) - W(s_i, t_j): increment over [s_i,s_{i+1}] x [0,t_j].
    double horizontal_increment(std::size_t component, std::size_t i, std::size_t j) const {
        return value(component, i + 1, j) - value(component, i, j);
    }

    /// W(s_i, t_{j+1}) - W(s_i, t_j): increment over [0,s_i] x [t_j,t_{j+1}].
    double vertical_increment(std::size_t component, std::size_t i, std::size_t j) const {
        return value(component, i, j + 1) - value(component, i, j);
    }
};

/// Draw one sheet path. Deterministic: identical (grid, components, seed)
/// yield bit-identical values on every platform with IEEE doubles.
/// Throws std::invalid_argument if components is 0 or exceeds max_components.
SheetPath simulate_sheet(const GridSpec& grid, std::size_t components, std::uint64_t seed,
                         std::size_t max_components = kDefaultMaxComponents);

/// Sum of squared horizontal increments along the row at t_j:
/// sum_i (W(s_{i+1},t_j) - W(s_i,t_j))^2. Expectation is s_N * t_j = t_j.
double quadratic_variation_row(const SheetPath& path, std::size_t component, std::size_t j);

/// CSV dump, header `component,i,j,s,t,value`, 17 significant digits,
/// rows ordered (component, i, j).
void write_path_csv(const SheetPath& path, std::ostream& os);

}  // namespace sheetcurrent
