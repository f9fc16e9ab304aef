#include "sheetcurrent/grid.hpp"

#include <stdexcept>
#include <utility>

namespace sheetcurrent {

GridSpec GridSpec::uniform(std::size_t n_s, std::size_t n_t) {
    if (n_s == 0 || n_t == 0) throw std::invalid_argument("GridSpec::uniform: cell counts must be >= 1");
    std::vector<double> s(n_s + 1), t(n_t + 1);
    for (std::size_t i = 0; i <= n_s; ++i) s[i] = static_cast<double>(i) / static_cast<double>(n_s);
    for (std::size_t j = 0; j <= n_t; ++j) t[j] = static_cast<double>(j) / static_cast<double>(n_t);
    s.front() = 0.0;
    s.back() = 1.0;
    t.front() = 0.0;
    t.back() = 1.0;
    return GridSpec(std::move(s), std::move(t));
}

namespace {

void validate_axis(const std::vector<double>& nodes, const char* axis) {
    if (nodes.size() < 2) throw std::invalid_argument(std::string("GridSpec: axis ") + axis + " needs at least 2 nodes");
    if (nodes.front() != 0.0) throw std::invalid_argument(std::string("GridSpec: axis ") + axis + " must start at 0");
    if (nodes.back() != 1.0) throw std::invalid_argument(std::string("GridSpec: axis ") + axis + " must end at 1");
    for (std::size_t k = 1; k < nodes.size(); ++k)
        if (!(nodes[k] > nodes[k - 1]))
            throw std::invalid_argument(std::string("GridSpec: axis ") + axis + " must be strictly increasing");
}

}  // namespace

GridSpec GridSpec::from_nodes(std::vector<double> s_nodes, std::vector<double> t_nodes) {
    validate_axis(s_nodes, "s");
    validate_axis(t_nodes, "t");
    return GridSpec(std::move(s_nodes), std::move(t_nodes));
}

}  // namespace sheetcurrent
