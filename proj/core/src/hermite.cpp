#include "sheetcurrent/hermite.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "sheetcurrent/quadrature.hpp"

namespace sheetcurrent {

namespace {
constexpr double kLog2Pi = 1.8378770664093454836;  // log(2*pi)
}

double hermite(unsigned n, double x) {
    double hm1 = 0.0, h = 1.0;
    for (unsigned k = 0; k < n; ++k) {
        const double next = (x * h - hm1) / static_cast<double>(k + 1);
        hm1 = h;
        h = next;
    }
    return h;
}

double hermite_gauss(unsigned n, double y) {
    double hm1 = 0.0, h = std::exp(-0.5 * y * y);
    for (unsigned k = 0; k < n; ++k) {
        const double next = (y * h - hm1) / static_cast<double>(k + 1);
        hm1 = h;
        h = next;
    }
    return h;
}

void hermite_gauss_seq(double y, std::span<double> out) {
    if (out.empty()) return;
    out[0] = std::exp(-0.5 * y * y);
    if (out.size() == 1) return;
    out[1] = y * out[0];
    for (std::size_t k = 1; k + 1 < out.size(); ++k)
        out[k + 1] = (y * out[k] - out[k - 1]) / static_cast<double>(k + 1);
}

std::vector<double> sqrt_table(std::size_t n) {
    std::vector<double> s(n + 1);
    for (std::size_t k = 0; k <= n; ++k) s[k] = std::sqrt(static_cast<double>(k));
    return s;
}

void hermite_orthonormal_seq(double z, std::span<double> out, std::span<const double> sqrts) {
    if (out.empty()) return;
    out[0] = 1.0;
    if (out.size() == 1) return;
    out[1] = z;
    for (std::size_t k = 1; k + 1 < out.size(); ++k)
        out[k + 1] = (z * out[k] - sqrts[k] * out[k - 1]) / sqrts[k + 1];
}

void hermite_orthonormal_gauss_seq(double z, std::span<double> out, std::span<const double> sqrts) {
    if (out.empty()) return;
    out[0] = std::exp(-0.5 * z * z);
    if (out.size() == 1) return;
    out[1] = z * out[0];
    for (std::size_t k = 1; k + 1 < out.size(); ++k)
        out[k + 1] = (z * out[k] - sqrts[k] * out[k - 1]) / sqrts[k + 1];
}

double gaussian_kernel(double s, double x) {
    if (!(s > 0.0)) throw std::domain_error("gaussian_kernel: variance must be > 0");
    return std::exp(-0.5 * x * x / s) / std::sqrt(2.0 * std::numbers::pi * s);
}

double gaussian_kernel_d(double s, std::span<const double> x) {
    if (!(s > 0.0)) throw std::domain_error("gaussian_kernel_d: variance must be > 0");
    double sq = 0.0;
    for (double xi : x) sq += xi * xi;
    const double d = static_cast<double>(x.size());
    return std::exp(-0.5 * sq / s - 0.5 * d * (kLog2Pi + std::log(s)));
}

double log_bound_constant(unsigned n) {
    const double nn = static_cast<double>(n);
    return 0.5 * nn * std::numbers::ln2 + std::numbers::ln2 - std::lgamma(nn + 1.0) -
           std::log(std::numbers::pi) + std::lgamma(0.5 * (nn + 1.0));
}

double bound_constant(unsigned n) { return std::exp(log_bound_constant(n)); }

double stirling_normalized(unsigned n) {
    if (n == 0) return 0.0;
    const double nn = static_cast<double>(n);
    return std::exp(std::lgamma(nn + 1.0) + 2.0 * log_bound_constant(n) + 0.5 * std::log(nn));
}

double stirling_limit() { return 4.0 * std::numbers::sqrt2 / std::pow(std::numbers::pi, 1.5); }

IdentityCheck hermite_gaussian_identity(unsigned n, double y, double quad_tol) {
    IdentityCheck chk;
    chk.lhs = hermite_gauss(n, y);

    // log of 2^{n/2} * 2 / (n! pi), the printed prefactor
    const double log_c = 0.5 * n * std::numbers::ln2 + std::numbers::ln2 -
                         std::lgamma(static_cast<double>(n) + 1.0) - std::log(std::numbers::pi);
    const double sign = (n / 2) % 2 == 0 ? 1.0 : -1.0;
    const double freq = y * std::numbers::sqrt2;
    const bool even = n % 2 == 0;

    auto integrand = [&](double u) {
        if (u <= 0.0) return 0.0;
        const double expo = (n > 0 ? n * std::log(u) : 0.0) - u * u + log_c;
        const double osc = even ? std::cos(freq * u) : std::sin(freq * u);
        return std::exp(expo) * osc;
    };

    const double upper = std::max(10.0, std::sqrt(0.5 * n) + 8.0);
    double prev = std::numeric_limits<double>::quiet_NaN();
    bool settled = false;
    for (unsigned panels = 16; panels <= 4096; panels *= 2) {
        const double val = quad_1d_panels(integrand, 0.0, upper, panels, 16);
        if (panels > 16 && std::abs(val - prev) <= quad_tol * std::max(1.0, std::abs(val))) {
            prev = val;
            settled = true;
            break;
        }
        prev = val;
    }
    if (!settled) throw std::runtime_error("hermite_gaussian_identity: quadrature did not settle");

    chk.rhs = sign * prev;
    chk.ratio = chk.lhs != 0.0 ? chk.rhs / chk.lhs : std::numeric_limits<double>::quiet_NaN();
    return chk;
}

}  // namespace sheetcurrent
