#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sheetcurrent {

/// H_n(x): probabilists' Hermite polynomial divided by n!.
/// H_0 = 1, H_1 = x, (n+1) H_{n+1}(x) = x H_n(x) - H_{n-1}(x).
/// Evaluated by the normalized forward recurrence; the division by n! is
/// never performed explicitly.
double hermite(unsigned n, double x);

/// H_n(y) * exp(-y^2/2). The Gaussian factor is folded into the recurrence
/// seeds, so the result stays in range (|result| <= bound_constant(n) <= 2/sqrt(pi))
/// even where exp(-y^2/2) alone would underflow.
double hermite_gauss(unsigned n, double y);

/// Fills out[m] = H_m(y) * exp(-y^2/2) for m = 0 .. out.size()-1.
void hermite_gauss_seq(double y, std::span<double> out);

/// sqrt(0..n) lookup used by the orthonormal recurrences.
std::vector<double> sqrt_table(std::size_t n);

/// Orthonormal Hermite values q_m(z) = He_m(z)/sqrt(m!), E[q_m(Z)^2] = 1.
/// q_{m+1} = (z q_m - sqrt(m) q_{m-1}) / sqrt(m+1).
/// sqrts must cover indices 0 .. out.size()-1.
void hermite_orthonormal_seq(double z, std::span<double> out, std::span<const double> sqrts);

/// Gaussian-weighted orthonormal values r_m(z) = q_m(z) * exp(-z^2/2).
/// Uniformly bounded in m and z, the stable building block for all
/// chaos-level series (m! * (H_m(z) e^{-z^2/2})^2 = r_m(z)^2).
void hermite_orthonormal_gauss_seq(double z, std::span<double> out, std::span<const double> sqrts);

/// Centered Gaussian density p_s(x) = exp(-x^2/(2s)) / sqrt(2 pi s).
/// Throws std::domain_error for s <= 0.
double gaussian_kernel(double s, double x);

/// d-fold product kernel prod_k p_s(x_k); evaluated in log space.
double gaussian_kernel_d(double s, std::span<const double> x);

/// log of c_n = 2^{n/2} * (2/(n! pi)) * Gamma((n+1)/2), the uniform bound
/// |H_n(y) e^{-y^2/2}| <= c_n. Computed with lgamma; exact for all n.
double log_bound_constant(unsigned n);
double bound_constant(unsigned n);

/// n! * c_n^2 * sqrt(n). Monotone increasing with limit 4*sqrt(2)/pi^{3/2};
/// strictly below the limit for every n (Gamma-ratio inequality).
double stirling_normalized(unsigned n);

/// 4*sqrt(2)/pi^{3/2} = lim n! c_n^2 sqrt(n), also its supremum over n >= 1.
double stirling_limit();

/// Both sides of the integral representation
///   H_n(y) e^{-y^2/2}  vs  (-1)^{floor(n/2)} 2^{n/2} (2/(n! pi)) *
///       int_0^inf u^n e^{-u^2} g(u y sqrt(2)) du,  g = cos (n even) / sin (n odd),
/// with the constant taken exactly as printed. The two sides agree only up to
/// the uniform factor ratio = rhs/lhs = 1/sqrt(pi) ~= 0.5642; the residual is
/// reported, never "fixed".
struct IdentityCheck {
    double lhs = 0.0;    ///< H_n(y) e^{-y^2/2}
    double rhs = 0.0;    ///< quadrature of the printed right-hand side
    double ratio = 0.0;  ///< rhs/lhs, NaN when |lhs| is 0
};

/// Evaluates the identity by adaptive composite Gauss-Legendre quadrature
/// (panels doubled until successive values agree within quad_tol).
/// Throws std::runtime_error if the quadrature fails to settle.
IdentityCheck hermite_gaussian_identity(unsigned n, double y, double quad_tol = 1e-9);

}  // namespace sheetcurrent
