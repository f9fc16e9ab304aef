#pragma once

// Independent reference implementations for the test suites. Everything here
// is deliberately naive (monomial expansions, brute-force permutations,
// covariance-matrix Gaussian algebra) and kept separate from the library under
// test.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <vector>

#include "sheetcurrent/grid.hpp"
#include "sheetcurrent/quadrature.hpp"

namespace oracles {

/// Monomial coefficients of the unnormalized probabilists' polynomial He_n,
/// extended precision. He_{n+1} = x He_n - n He_{n-1}.
inline std::vector<long double> he_coeffs(unsigned n) {
    std::vector<std::vector<long double>> he(n + 1);
    he[0] = {1.0L};
    if (n >= 1) he[1] = {0.0L, 1.0L};
    for (unsigned k = 1; k < n; ++k) {
        std::vector<long double> next(k + 2, 0.0L);
        for (unsigned p = 0; p <= k; ++p) next[p + 1] += he[k][p];
        for (unsigned p = 0; p < k; ++p) next[p] -= static_cast<long double>(k) * he[k - 1][p];
        he[k + 1] = std::move(next);
    }
    return he[n];
}

inline long double he_eval(unsigned n, long double x) {
    const auto c = he_coeffs(n);
    long double v = 0.0L;
    for (std::size_t p = c.size(); p-- > 0;) v = v * x + c[p];
    return v;
}

inline long double factorial_ld(unsigned n) {
    long double f = 1.0L;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

/// H_n = He_n / n! in long double.
inline double hermite_ref(unsigned n, double x) {
    return static_cast<double>(he_eval(n, x) / factorial_ld(n));
}

/// q_n = He_n / sqrt(n!).
inline double orthonormal_ref(unsigned n, double z) {
    return static_cast<double>(he_eval(n, z) / std::sqrt(factorial_ld(n)));
}

/// Average of f over all permutations of args.
inline double permutation_average(const std::function<double(std::span<const double>)>& f,
                                  std::span<const double> args) {
    std::vector<std::size_t> idx(args.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<double> tuple(args.size());
    double sum = 0.0;
    std::uint64_t count = 0;
    std::sort(idx.begin(), idx.end());
    do {
        for (std::size_t k = 0; k < args.size(); ++k) tuple[k] = args[idx[k]];
        sum += f(tuple);
        ++count;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return sum / static_cast<double>(count);
}

/// Brownian-sheet covariance of node values: min(s,s') min(t,t').
inline double sheet_cov(double s1, double t1, double s2, double t2) {
    return std::min(s1, s2) * std::min(t1, t2);
}

/// E[ T_A conj(T_B) ] for the Fourier grid currents
///   T_G = sum_{i,j>=1} e^{-i x W(s_i,t_j)} DhW DvW
/// on two (possibly different) grids over the same sheet, by Gaussian moment
/// algebra: for jointly Gaussian (G, m1, m2, m3, m4) with C(G,mk)=0,
///   E[e^{iG} m1 m2 m3 m4] = e^{-Var(G)/2} (C12 C34 + C13 C24 + C14 C23).
/// Here G = x (W_A - W_B), m1 m2 the A increments, m3 m4 the B increments;
/// C(G, mk) = 0 because each increment lies strictly to the right/above its
/// own corner... not in general for two different corners, so the full phase
/// covariance with the increments is kept.
///
/// General formula used (all five jointly Gaussian, G centered):
///   E[e^{iG} m1 m2 m3 m4] = e^{-Var(G)/2} *
///       [ mu1 mu2 mu3 mu4 + sum_{pairs} C_{kl} mu_a mu_b + C12 C34 + C13 C24 + C14 C23 ]
/// with mu_k = i Cov(G, m_k) the shifted means.
struct RectIncrement {
    // increment of W over [a0,a1] x [b0,b1]
    double a0, a1, b0, b1;
};

inline double rect_cov(const RectIncrement& r1, const RectIncrement& r2) {
    const double ds = std::max(0.0, std::min(r1.a1, r2.a1) - std::max(r1.a0, r2.a0));
    const double dt = std::max(0.0, std::min(r1.b1, r2.b1) - std::max(r1.b0, r2.b0));
    return ds * dt;
}

inline double corner_rect_cov(double s, double t, const RectIncrement& r) {
    // Cov(W(s,t), increment over r) = overlap of [0,s]x[0,t] with r
    const double ds = std::max(0.0, std::min(s, r.a1) - r.a0);
    const double dt = std::max(0.0, std::min(t, r.b1) - r.b0);
    return ds * dt;
}

inline std::complex<double> fourier_cross_moment(const sheetcurrent::GridSpec& ga,
                                                 const sheetcurrent::GridSpec& gb, double x) {
    using cplx = std::complex<double>;
    const cplx I(0.0, 1.0);
    cplx total(0.0, 0.0);
    for (std::size_t ia = 1; ia < ga.ns(); ++ia) {
        for (std::size_t ja = 1; ja < ga.nt(); ++ja) {
            const double sa = ga.s(ia), ta = ga.t(ja);
            const RectIncrement h1{sa, ga.s(ia + 1), 0.0, ta};   // horizontal increment A
            const RectIncrement v1{0.0, sa, ta, ga.t(ja + 1)};   // vertical increment A
            for (std::size_t ib = 1; ib < gb.ns(); ++ib) {
                for (std::size_t jb = 1; jb < gb.nt(); ++jb) {
                    const double sb = gb.s(ib), tb = gb.t(jb);
                    const RectIncrement h2{sb, gb.s(ib + 1), 0.0, tb};
                    const RectIncrement v2{0.0, sb, tb, gb.t(jb + 1)};
                    // G = -x W_A + x W_B (phase of e^{-ixW_A} e^{+ixW_B})
                    const double varG =
                        x * x * (sa * ta + sb * tb - 2.0 * sheet_cov(sa, ta, sb, tb));
                    // m1,m2 = A increments; m3,m4 = B increments
                    const RectIncrement m[4] = {h1, v1, h2, v2};
                    // Cov(G, m_k) = -x Cov(W_A, m_k) + x Cov(W_B, m_k)
                    cplx mu[4];
                    for (int k = 0; k < 4; ++k) {
                        const double c =
                            -x * corner_rect_cov(sa, ta, m[k]) + x * corner_rect_cov(sb, tb, m[k]);
                        mu[k] = I * c;
                    }
                    double C[4][4];
                    for (int k = 0; k < 4; ++k)
                        for (int l = 0; l < 4; ++l) C[k][l] = rect_cov(m[k], m[l]);
                    const cplx quad = mu[0] * mu[1] * mu[2] * mu[3] +
                                      C[0][1] * mu[2] * mu[3] + C[0][2] * mu[1] * mu[3] +
                                      C[0][3] * mu[1] * mu[2] + C[1][2] * mu[0] * mu[3] +
                                      C[1][3] * mu[0] * mu[2] + C[2][3] * mu[0] * mu[1] +
                                      C[0][1] * C[2][3] + C[0][2] * C[1][3] + C[0][3] * C[1][2];
                    total += std::exp(-0.5 * varG) * quad;
                }
            }
        }
    }
    return total;
}

/// Composite Gauss-Legendre of a complex integrand over [a, b].
inline std::complex<double> quad_complex(const std::function<std::complex<double>(double)>& f,
                                         double a, double b, unsigned panels, unsigned order) {
    const auto& gl = sheetcurrent::gauss_legendre(order);
    std::complex<double> sum(0.0, 0.0);
    const double h = (b - a) / panels;
    for (unsigned p = 0; p < panels; ++p) {
        const double c = a + (p + 0.5) * h;
        for (unsigned k = 0; k < order; ++k)
            sum += gl.weights[k] * f(c + 0.5 * h * gl.nodes[k]);
    }
    return sum * (0.5 * h);
}

}  // namespace oracles
