#include "sheetcurrent/chaos.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sheetcurrent/hermite.hpp"

namespace sheetcurrent {

namespace {
constexpr double kLog2Pi = 1.8378770664093454836;
constexpr double kInvSqrt2Pi = 0.3989422804014326779;
}

double delta_coeff(unsigned m, double u, double v, double x) {
    const double uv = u * v;
    if (!(uv > 0.0)) throw std::domain_error("delta_coeff: u*v must be > 0");
    const double g = hermite_gauss(m, x / std::sqrt(uv));
    if (g == 0.0) return 0.0;
    const double logmag = std::log(std::abs(g)) - 0.5 * (m + 1.0) * std::log(uv) - 0.5 * kLog2Pi;
    return std::copysign(std::exp(logmag), g);
}

double delta_coeff_stable(unsigned m, double uv, double x) {
    if (uv < 0.0) throw std::domain_error("delta_coeff_stable: uv must be >= 0");
    if (uv == 0.0) return x != 0.0 ? 0.0 : hermite(m, 0.0) * kInvSqrt2Pi;
    return hermite_gauss(m, x / std::sqrt(uv)) * kInvSqrt2Pi;
}

std::complex<double> delta_coeff_fourier(unsigned m, double v, double x) {
    if (x == 0.0) return m == 0 ? std::complex<double>(1.0, 0.0) : std::complex<double>(0.0, 0.0);
    double mag = std::exp(-0.5 * x * x * v + m * std::log(std::abs(x)) -
                          std::lgamma(static_cast<double>(m) + 1.0));
    if (x < 0.0 && m % 2 == 1) mag = -mag;
    switch (m % 4) {  // (-i)^m, never by powering
        case 0: return {mag, 0.0};
        case 1: return {0.0, -mag};
        case 2: return {-mag, 0.0};
        default: return {0.0, mag};
    }
}

double tensor_multiple_integral(unsigned n, double s, double t, double w) {
    if (n == 0) return 1.0;
    const double st = s * t;
    if (!(st > 0.0)) throw std::domain_error("tensor_multiple_integral: s*t must be > 0 for n >= 1");
    const double z = w / std::sqrt(st);
    // unnormalized probabilists' recurrence He_{k+1} = z He_k - k He_{k-1}
    double hem1 = 0.0, he = 1.0;
    for (unsigned k = 0; k < n; ++k) {
        const double next = z * he - k * hem1;
        hem1 = he;
        he = next;
    }
    return std::pow(st, 0.5 * n) * he;
}

double truncated_delta(double x, double s, double t, double w, unsigned M) {
    const double st = s * t;
    if (!(st > 0.0)) throw std::domain_error("truncated_delta: s*t must be > 0");
    const double root = std::sqrt(st);
    const double zx = x / root;
    const double zw = w / root;

    // sum_m r_m(zx) q_m(zw), both orthonormal recurrences run in lockstep
    double r_m1 = 0.0, r_m = std::exp(-0.5 * zx * zx);
    double q_m1 = 0.0, q_m = 1.0;
    double sum = r_m * q_m;
    for (unsigned k = 0; k < M; ++k) {
        const double sk = std::sqrt(static_cast<double>(k));
        const double sk1 = std::sqrt(static_cast<double>(k + 1));
        const double rn = (zx * r_m - sk * r_m1) / sk1;
        const double qn = (zw * q_m - sk * q_m1) / sk1;
        r_m1 = r_m;
        r_m = rn;
        q_m1 = q_m;
        q_m = qn;
        sum += r_m * q_m;
    }
    return sum / std::sqrt(2.0 * std::numbers::pi * st);
}

double truncated_delta_product(std::span<const double> x, double s, double t,
                               std::span<const double> w, std::span<const unsigned> caps) {
    if (x.size() != w.size())
        throw std::invalid_argument("truncated_delta_product: x and w size mismatch");
    if (caps.size() != 1 && caps.size() != x.size())
        throw std::invalid_argument("truncated_delta_product: caps must have size 1 or x.size()");
    double prod = 1.0;
    for (std::size_t k = 0; k < x.size(); ++k)
        prod *= truncated_delta(x[k], s, t, w[k], caps.size() == 1 ? caps[0] : caps[k]);
    return prod;
}

double symmetrize_partial(const std::function<double(std::span<const double>)>& f,
                          std::span<const double> args) {
    if (args.size() < 2) throw std::invalid_argument("symmetrize_partial: need at least 2 arguments");
    const std::size_t n = args.size();
    const std::size_t m = n - 2;

    std::vector<double> tuple(n);
    double sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
            if (l == k) continue;
            std::size_t pos = 0;
            for (std::size_t idx = 0; idx < n; ++idx)
                if (idx != k && idx != l) tuple[pos++] = args[idx];
            tuple[m] = args[k];
            tuple[m + 1] = args[l];

            const double base = f(tuple);
            // adjacent transpositions generate S_m: verify the declared symmetry
            for (std::size_t p = 0; p + 1 < m; ++p) {
                std::swap(tuple[p], tuple[p + 1]);
                const double swapped = f(tuple);
                std::swap(tuple[p], tuple[p + 1]);
                if (std::abs(swapped - base) > 1e-12 * std::max(1.0, std::abs(base)))
                    throw std::invalid_argument(
                        "symmetrize_partial: f is not symmetric in its first m arguments");
            }
            sum += base;
        }
    }
    return sum / (static_cast<double>(m + 1) * static_cast<double>(m + 2));
}

}  // namespace sheetcurrent
