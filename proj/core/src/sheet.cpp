#include "sheetcurrent/sheet.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "sheetcurrent/rng.hpp"
#include "sheetcurrent/serialize.hpp"

namespace sheetcurrent {

SheetPath simulate_sheet(const GridSpec& grid, std::size_t components, std::uint64_t seed,
                         std::size_t max_components) {
    if (components == 0) throw std::invalid_argument("simulate_sheet: components must be >= 1");
    if (components > max_components)
        throw std::invalid_argument("simulate_sheet: components exceeds max_components");

    const std::size_t n = grid.ns();
    const std::size_t m = grid.nt();
    const std::size_t stride_j = m + 1;
    const std::size_t per_comp = (n + 1) * stride_j;

    SheetPath path{grid, components, seed, std::vector<double>(components * per_comp, 0.0)};

    NormalStream normals(seed);
    for (std::size_t k = 0; k < components; ++k) {
        double* w = path.values.data() + k * per_comp;
        // W(s_{i+1}, t_{j+1}) = W(s_i, t_{j+1}) + W(s_{i+1}, t_j) - W(s_i, t_j)
        //                       + sqrt(ds*dt) * z, the rectangle-increment cumsum.
        for (std::size_t i = 0; i < n; ++i) {
            const double ds = grid.ds(i);
            for (std::size_t j = 0; j < m; ++j) {
                const double sd = std::sqrt(ds * grid.dt(j));
                w[(i + 1) * stride_j + (j + 1)] = w[i * stride_j + (j + 1)] +
                                                  w[(i + 1) * stride_j + j] - w[i * stride_j + j] +
                                                  sd * normals.next();
            }
        }
    }
    return path;
}

double quadratic_variation_row(const SheetPath& path, std::size_t component, std::size_t j) {
    double qv = 0.0, c = 0.0;
    for (std::size_t i = 0; i < path.grid.ns(); ++i) {
        const double d = path.horizontal_increment(component, i, j);
        const double y = d * d - c;
        const double t = qv + y;
        c = (t - qv) - y;
        qv = t;
    }
    return qv;
}

void write_path_csv(const SheetPath& path, std::ostream& os) {
    os << "component,i,j,s,t,value\n";
    for (std::size_t k = 0; k < path.components; ++k)
        for (std::size_t i = 0; i <= path.grid.ns(); ++i)
            for (std::size_t j = 0; j <= path.grid.nt(); ++j)
                os << k << ',' << i << ',' << j << ',' << format_sig17(path.grid.s(i)) << ','
                   << format_sig17(path.grid.t(j)) << ',' << format_sig17(path.value(k, i, j))
                   << '\n';
}

}  // namespace sheetcurrent
