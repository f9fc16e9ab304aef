#include "sheetcurrent/current.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sheetcurrent/chaos.hpp"
#include "sheetcurrent/quadrature.hpp"

namespace sheetcurrent {

namespace {

struct Kahan {
    double sum = 0.0, c = 0.0;
    void add(double v) {
        const double y = v - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

/// Shared two-index Fourier sum: phase from all components, increments from
/// components ci, cj (0-based). Rows i=0 and columns j=0 are skipped: one of
/// the two increments lies on an axis where every component vanishes.
std::complex<double> fourier_sum(const SheetPath& path, std::span<const double> x, std::size_t ci,
                                 std::size_t cj) {
    Kahan re, im;
    for (std::size_t i = 1; i < path.grid.ns(); ++i) {
        for (std::size_t j = 1; j < path.grid.nt(); ++j) {
            double phase = 0.0;
            for (std::size_t k = 0; k < x.size(); ++k) phase += x[k] * path.value(k, i, j);
            const double inc =
                path.horizontal_increment(ci, i, j) * path.vertical_increment(cj, i, j);
            re.add(std::cos(phase) * inc);
            im.add(-std::sin(phase) * inc);
        }
    }
    return {re.sum, im.sum};
}

}  // namespace

double riemann_current(const SheetPath& path, double x, unsigned m_max) {
    if (path.components != 1) throw std::invalid_argument("riemann_current: path must be scalar");
    Kahan acc;
    for (std::size_t i = 1; i < path.grid.ns(); ++i) {
        for (std::size_t j = 1; j < path.grid.nt(); ++j) {
            const double delta =
                truncated_delta(x, path.grid.s(i), path.grid.t(j), path.value(0, i, j), m_max);
            acc.add(delta * path.horizontal_increment(0, i, j) *
                    path.vertical_increment(0, i, j));
        }
    }
    return acc.sum;
}

std::complex<double> fourier_current(const SheetPath& path, double x) {
    if (path.components != 1) throw std::invalid_argument("fourier_current: path must be scalar");
    return fourier_sum(path, std::span<const double>(&x, 1), 0, 0);
}

double fourier_second_moment_exact(const GridSpec& grid) {
    Kahan a, b;
    for (std::size_t i = 1; i < grid.ns(); ++i) a.add(grid.s(i) * grid.ds(i));
    for (std::size_t j = 1; j < grid.nt(); ++j) b.add(grid.t(j) * grid.dt(j));
    return a.sum * b.sum;
}

ApproxErrorFourier approx_error_fourier_exact(const GridSpec& grid, double x, unsigned order) {
    const double diag = fourier_second_moment_exact(grid);
    double cross;
    if (x == 0.0) {
        cross = diag;  // integrand identically 1: cell integrals are exact areas
    } else {
        const GaussLegendre& gl = gauss_legendre(order);
        Kahan acc;
        for (std::size_t i = 1; i < grid.ns(); ++i) {
            const double cu = grid.s(i) + 0.5 * grid.ds(i), hu = 0.5 * grid.ds(i);
            for (std::size_t j = 1; j < grid.nt(); ++j) {
                const double st = grid.s(i) * grid.t(j);
                const double cv = grid.t(j) + 0.5 * grid.dt(j), hv = 0.5 * grid.dt(j);
                double cell = 0.0;
                for (unsigned a = 0; a < order; ++a) {
                    const double u = cu + hu * gl.nodes[a];
                    double row = 0.0;
                    for (unsigned b = 0; b < order; ++b) {
                        const double v = cv + hv * gl.nodes[b];
                        row += gl.weights[b] * std::exp(-0.5 * x * x * (u * v - st));
                    }
                    cell += gl.weights[a] * row;
                }
                acc.add(st * cell * hu * hv);
            }
        }
        cross = acc.sum;
    }
    ApproxErrorFourier out;
    out.raw = diag + 0.25 - 2.0 * cross;
    out.value = out.raw < 0.0 ? 0.0 : out.raw;
    return out;
}

std::complex<double> multi_fourier_current(const SheetPath& path, std::span<const double> x,
                                           unsigned i, unsigned j) {
    if (x.size() != path.components)
        throw std::invalid_argument("multi_fourier_current: x dimension != path components");
    if (i < 1 || i > path.components || j < 1 || j > path.components)
        throw std::out_of_range("multi_fourier_current: component index out of range");
    return fourier_sum(path, x, i - 1, j - 1);
}

std::vector<std::complex<double>> multi_fourier_current_all(const SheetPath& path,
                                                            std::span<const double> x) {
    if (x.size() != path.components)
        throw std::invalid_argument("multi_fourier_current_all: x dimension != path components");
    const std::size_t d = path.components;
    std::vector<Kahan> re(d * d), im(d * d);
    for (std::size_t a = 1; a < path.grid.ns(); ++a) {
        for (std::size_t b = 1; b < path.grid.nt(); ++b) {
            double phase = 0.0;
            for (std::size_t k = 0; k < d; ++k) phase += x[k] * path.value(k, a, b);
            const double cp = std::cos(phase), sp = std::sin(phase);
            for (std::size_t ci = 0; ci < d; ++ci) {
                const double h = path.horizontal_increment(ci, a, b);
                for (std::size_t cj = 0; cj < d; ++cj) {
                    const double inc = h * path.vertical_increment(cj, a, b);
                    re[ci * d + cj].add(cp * inc);
                    im[ci * d + cj].add(-sp * inc);
                }
            }
        }
    }
    std::vector<std::complex<double>> out(d * d);
    for (std::size_t k = 0; k < d * d; ++k) out[k] = {re[k].sum, im[k].sum};
    return out;
}

std::string to_string(SobolevVerdict v) {
    return v == SobolevVerdict::finite ? "finite" : "divergent";
}

namespace {

/// int_a^b rho^{d-1} (1+rho^2)^{-r} drho; log substitution past rho = 1.
double radial_segment(double r, unsigned d, double a, double b) {
    auto direct = [&](double rho) {
        return std::pow(rho, static_cast<double>(d - 1)) * std::pow(1.0 + rho * rho, -r);
    };
    auto logsub = [&](double y) {
        const double rho = std::exp(y);
        return std::pow(rho, static_cast<double>(d)) * std::pow(1.0 + rho * rho, -r);
    };
    double total = 0.0;
    if (a < 1.0) {
        const double hi = std::min(b, 1.0);
        total += quad_1d_panels(direct, a, hi, 4, 64);
    }
    if (b > 1.0) {
        const double ya = std::log(std::max(a, 1.0));
        const double yb = std::log(b);
        const unsigned panels = std::max<unsigned>(8, static_cast<unsigned>(std::ceil(yb - ya)) + 2);
        total += quad_1d_panels(logsub, ya, yb, panels, 64);
    }
    return total;
}

}  // namespace

SobolevScan sobolev_norm_scan(double r, unsigned d, std::span<const double> cutoffs) {
    if (!(r > 0.0)) throw std::invalid_argument("sobolev_norm_scan: r must be > 0");
    if (d < 1) throw std::invalid_argument("sobolev_norm_scan: d must be >= 1");
    if (cutoffs.size() < 2)
        throw std::invalid_argument("sobolev_norm_scan: need at least 2 cutoffs");
    for (std::size_t k = 0; k < cutoffs.size(); ++k)
        if (!(cutoffs[k] > (k == 0 ? 0.0 : cutoffs[k - 1])))
            throw std::invalid_argument("sobolev_norm_scan: cutoffs must be positive increasing");

    const double dd = static_cast<double>(d);
    const double surface = 2.0 * std::pow(std::numbers::pi, 0.5 * dd) / std::tgamma(0.5 * dd);
    const double prefactor = 0.25 * dd * dd * surface;

    SobolevScan scan;
    scan.r = r;
    scan.d = d;
    scan.values.reserve(cutoffs.size());
    double radial = 0.0, lo = 0.0;
    for (double R : cutoffs) {
        radial += radial_segment(r, d, lo, R);  // nonnegative increments by construction
        lo = R;
        scan.values.push_back(prefactor * radial);
    }
    scan.integral_value = scan.values.back();
    scan.cutoff = cutoffs.back();

    const std::size_t n = scan.values.size();
    const double last_inc = scan.values[n - 1] - scan.values[n - 2];
    const bool small_rel = last_inc < 1e-4 * scan.values[n - 1];
    const bool decaying =
        n >= 3 && last_inc <= 0.9 * (scan.values[n - 2] - scan.values[n - 3]);
    scan.verdict = (small_rel || decaying) ? SobolevVerdict::finite : SobolevVerdict::divergent;
    return scan;
}

std::vector<double> default_sobolev_cutoffs() { return {10.0, 100.0, 1000.0, 10000.0}; }

}  // namespace sheetcurrent
