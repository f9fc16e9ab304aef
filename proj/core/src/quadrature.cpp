#include "sheetcurrent/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace sheetcurrent {

namespace {

GaussLegendre compute_rule(unsigned order) {
    GaussLegendre rule;
    rule.nodes.assign(order, 0.0);
    rule.weights.assign(order, 0.0);
    const unsigned half = (order + 1) / 2;
    for (unsigned i = 0; i < half; ++i) {
        // Chebyshev-like initial guess, then Newton on P_order.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double p = 0.0, dp = 0.0;
        for (unsigned iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (unsigned k = 0; k < order; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k + 1.0) * x * p1 - k * p2) / (k + 1.0);
            }
            p = p0;
            dp = order * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) <= 1e-16 * std::max(1.0, std::abs(x))) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    return rule;
}

}  // namespace

const GaussLegendre& gauss_legendre(unsigned order) {
    if (order == 0) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    static std::mutex mu;
    static std::map<unsigned, GaussLegendre> cache;  // node-stable: refs survive inserts
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
    return it->second;
}

double quad_rect(const std::function<double(double, double)>& f, const Rect& r, unsigned order) {
    const GaussLegendre& gl = gauss_legendre(order);
    const double cu = 0.5 * (r.u0 + r.u1), hu = 0.5 * (r.u1 - r.u0);
    const double cv = 0.5 * (r.v0 + r.v1), hv = 0.5 * (r.v1 - r.v0);
    double sum = 0.0;
    for (unsigned a = 0; a < order; ++a) {
        const double u = cu + hu * gl.nodes[a];
        double row = 0.0;
        for (unsigned b = 0; b < order; ++b) row += gl.weights[b] * f(u, cv + hv * gl.nodes[b]);
        sum += gl.weights[a] * row;
    }
    return sum * hu * hv;
}

QuadResult quad_2d(const std::function<double(double, double)>& f, const Rect& r, unsigned order,
                   double tol) {
    if (order < 2) throw std::invalid_argument("quad_2d: order must be >= 2");
    QuadResult res;
    const double coarse = quad_rect(f, r, order);
    const double fine = quad_rect(f, r, order + 8);
    res.value = fine;
    res.err_estimate = std::abs(fine - coarse);
    res.converged = res.err_estimate <= tol * std::max(1.0, std::abs(fine));
    return res;
}

double quad_1d_panels(const std::function<double(double)>& f, double a, double b, unsigned panels,
                      unsigned order) {
    const GaussLegendre& gl = gauss_legendre(order);
    const double h = (b - a) / panels;
    double sum = 0.0;
    for (unsigned p = 0; p < panels; ++p) {
        const double c = a + (p + 0.5) * h;
        double panel = 0.0;
        for (unsigned k = 0; k < order; ++k) panel += gl.weights[k] * f(c + 0.5 * h * gl.nodes[k]);
        sum += panel;
    }
    return sum * 0.5 * h;
}

}  // namespace sheetcurrent
