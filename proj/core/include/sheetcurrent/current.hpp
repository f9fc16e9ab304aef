#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sheetcurrent/grid.hpp"
#include "sheetcurrent/sheet.hpp"

namespace sheetcurrent {

/// lim_{N,M -> inf} E|fourier_current|^2 on uniform grids = 1/4.
inline constexpr double kSecondMomentLimit = 0.25;

/// Riemann sum of the truncated-delta current on a scalar path:
///   sum_{i,j >= 1} truncated_delta(x, s_i, t_j, W(s_i,t_j), M_max) * DhW * DvW
/// where DhW = W(s_{i+1},t_j) - W(s_i,t_j), DvW = W(s_i,t_{j+1}) - W(s_i,t_j).
/// Rows/columns touching the axes (s_i t_j = 0) drop out: one of the two
/// increments lies on an axis where the sheet vanishes identically.
double riemann_current(const SheetPath& path, double x, unsigned m_max);

/// Fourier transform of the empirical current at frequency x:
///   sum_{i,j} exp(-i x W(s_i,t_j)) * DhW * DvW
/// (terms with i=0 or j=0 vanish pathwise; no chaos truncation involved).
std::complex<double> fourier_current(const SheetPath& path, double x);

/// E|fourier_current|^2 = sum_{i,j} s_i t_j Ds_i Dt_j, independent of x.
/// Uniform n-by-n grid: ((n-1)/(2n))^2.
double fourier_second_moment_exact(const GridSpec& grid);

struct ApproxErrorFourier {
    double value = 0.0;  ///< raw clamped to >= 0
    double raw = 0.0;
};

/// Exact L^2 gap between the grid current and its limit at frequency x:
///   sum s_i t_j Ds Dt + 1/4 - 2 sum_{i,j} s_i t_j int_cell e^{-x^2 (uv - s_i t_j)/2} du dv,
/// cell integrals by tensor Gauss-Legendre of the given order.
ApproxErrorFourier approx_error_fourier_exact(const GridSpec& grid, double x, unsigned order = 8);

/// Matrix-component current for a d-component sheet (d >= 2), 1-based (i, j):
///   sum_{a,b} exp(-i <x, W(s_a,t_b)>) * DhW^{(i)} * DvW^{(j)}.
/// x.size() must equal path.components. Throws std::out_of_range on bad
/// component indices.
std::complex<double> multi_fourier_current(const SheetPath& path, std::span<const double> x,
                                           unsigned i, unsigned j);

/// All d*d components at once, sharing one phase pass over the grid.
/// Result indexed [ (i-1)*d + (j-1) ].
std::vector<std::complex<double>> multi_fourier_current_all(const SheetPath& path,
                                                            std::span<const double> x);

enum class SobolevVerdict { finite, divergent };

struct SobolevScan {
    double r = 0.0;
    unsigned d = 1;
    std::vector<double> values;  ///< integral at each cutoff, nondecreasing
    double integral_value = 0.0;  ///< value at the largest cutoff
    double cutoff = 0.0;          ///< largest cutoff radius
    SobolevVerdict verdict = SobolevVerdict::divergent;
};

std::string to_string(SobolevVerdict v);

/// (d^2/4) * int_{|x| <= R} (1+|x|^2)^{-r} dx over the cutoff schedule,
/// computed radially: (d^2/4) * surf(S^{d-1}) * int_0^R rho^{d-1}(1+rho^2)^{-r} drho.
/// Verdict finite when the cutoff sequence is Cauchy: relative increment at
/// the last step < 1e-4, or increments decay geometrically (last <= 0.9 *
/// previous). Matches the analytic criterion r > d/2 on the default schedule.
SobolevScan sobolev_norm_scan(double r, unsigned d, std::span<const double> cutoffs);

/// Default cutoff schedule {10, 100, 1000, 10000}.
std::vector<double> default_sobolev_cutoffs();

}  // namespace sheetcurrent
