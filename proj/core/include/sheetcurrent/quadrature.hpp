#pragma once

#include <functional>
#include <span>
#include <vector>

namespace sheetcurrent {

/// Gauss-Legendre rule on [-1, 1]. Nodes/weights are computed once per order
/// (Newton iteration on the Legendre polynomial) and cached; thread safe.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussLegendre& gauss_legendre(unsigned order);

struct Rect {
    double u0 = 0.0, u1 = 1.0;
    double v0 = 0.0, v1 = 1.0;
};

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
    bool converged = false;
};

/// Single-panel tensor Gauss-Legendre on a rectangle.
double quad_rect(const std::function<double(double, double)>& f, const Rect& r, unsigned order);

/// Tensor quadrature with an order-escalation error estimate:
/// value at `order+8` is returned, err_estimate = |I(order+8) - I(order)|,
/// converged when the estimate meets tol (abs or rel to |value|).
QuadResult quad_2d(const std::function<double(double, double)>& f, const Rect& r,
                   unsigned order = 16, double tol = 1e-10);

/// Composite 1D Gauss-Legendre over [a, b] split into `panels` equal panels.
double quad_1d_panels(const std::function<double(double)>& f, double a, double b,
                      unsigned panels, unsigned order);

}  // namespace sheetcurrent
