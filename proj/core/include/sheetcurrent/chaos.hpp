#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace sheetcurrent {

/// Kernel coefficient a_m^x(u, v) = H_m(x/sqrt(uv)) e^{-x^2/(2uv)} (uv)^{-(m+1)/2}
/// / sqrt(2 pi), evaluated in log space. Requires u*v > 0 (throws std::domain_error
/// otherwise). Grows like (uv)^{-(m+1)/2} as uv -> 0 when x = 0; prefer
/// delta_coeff_stable for anything that multiplies back by (uv)^{(m+1)/2}.
double delta_coeff(unsigned m, double u, double v, double x);

/// (uv)^{(m+1)/2} * a_m^x(u,v) = H_m(z) e^{-z^2/2} / sqrt(2 pi), z = x/sqrt(uv).
/// Continuous as uv -> 0: limit 0 for x != 0, H_m(0)/sqrt(2 pi) for x = 0.
/// uv = 0 is accepted and returns the limit.
double delta_coeff_stable(unsigned m, double uv, double x);

/// Fourier-side coefficient of the delta development:
/// ahat_m(v, x) = e^{-x^2 v / 2} (-i x)^m / m!  (v = product of the two time
/// coordinates). Stable for the small m it is used with.
std::complex<double> delta_coeff_fourier(unsigned m, double v, double x);

/// n-th Wiener chaos of the product indicator 1_{[0,s]x[0,t]}^{(n)} evaluated
/// against a sheet value w = W(s,t): equals (st)^{n/2} He_n(w/sqrt(st)) =
/// n! (st)^{n/2} H_n(w/sqrt(st)). n = 0 returns 1. Throws std::domain_error
/// for s*t <= 0 when n >= 1.
double tensor_multiple_integral(unsigned n, double s, double t, double w);

/// M-term delta approximation evaluated on a sheet value w = W(s,t):
///   sum_{m=0}^{M} a_m^x(s,t) I_m = (1/sqrt(2 pi s t)) sum_m r_m(x/sqrt(st)) q_m(w/sqrt(st))
/// where r_m, q_m are the (weighted) orthonormal Hermite values. Unbiased:
/// E = p_{st}(x) for every M >= 0.
double truncated_delta(double x, double s, double t, double w, unsigned M);

/// Product over components k of truncated_delta(x[k], s, t, w[k], caps[k]).
/// caps.size() == 1 applies the same cap to all components.
double truncated_delta_product(std::span<const double> x, double s, double t,
                               std::span<const double> w, std::span<const unsigned> caps);

/// Partial symmetrization of f(t_1, .., t_m, a, b), f symmetric in its first
/// m arguments, evaluated at the tuple args (size m+2):
///   (1/((m+1)(m+2))) sum_{k != l} f(args minus positions k,l in order, args[k], args[l]).
/// The result is fully symmetric in all m+2 arguments and coincides with the
/// average of f over all (m+2)! argument permutations. The symmetry
/// precondition is checked on every evaluation tuple (adjacent transpositions,
/// 1e-12 relative); violations throw std::invalid_argument.
double symmetrize_partial(const std::function<double(std::span<const double>)>& f,
                          std::span<const double> args);

}  // namespace sheetcurrent
