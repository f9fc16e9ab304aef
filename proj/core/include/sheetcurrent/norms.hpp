#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sheetcurrent/grid.hpp"

namespace sheetcurrent {

/// Chaos-level weight (1+m)^alpha or (3+m)^alpha. The two conventions differ
/// termwise by ((3+m)/(1+m))^alpha in [1, 3^|alpha|]; the convergence class is
/// identical. Default ThreePlusM (weight indexed by total chaos order m+2).
enum class WeightConvention { OnePlusM, ThreePlusM };

double series_weight(WeightConvention c, unsigned m, double alpha);
std::string to_string(WeightConvention c);

struct SeriesParams {
    double alpha = -0.6;
    unsigned m_max = 200;
    unsigned quad_order = 16;
    WeightConvention convention = WeightConvention::ThreePlusM;
};

struct SeriesResult {
    double alpha = 0.0;
    WeightConvention convention = WeightConvention::ThreePlusM;
    unsigned m_max = 0;
    double partial_sum = 0.0;
    /// Rigorous upper bound on everything beyond m_max; +infinity when the
    /// weighted bounding series diverges (alpha >= -1/2).
    double tail_bound = 0.0;
    std::vector<std::pair<unsigned, double>> terms;
    bool converged = false;
};

/// Squared weighted norm of the delta development at level x:
///   sum_m weight(m) * m! * int_0^1 int_0^1 (p_{uv}(x) H_m(x/sqrt(uv)))^2 uv du dv.
/// Per-term integrals by tensor Gauss-Legendre in the stable combined form;
/// m-term = weight(m)/(2 pi) * int int r_m(x/sqrt(uv))^2 du dv. Divergence
/// (alpha >= -1/2) is reported through converged=false and an infinite
/// tail_bound, never an exception.
SeriesResult watanabe_norm_xi(double x, const SeriesParams& params);

/// Weighted squared distance between the grid Riemann approximation of the
/// delta development and its continuum limit:
///   sum_m weight(m) * m! * (S1 - 2 S2 + S3)
/// with S1 the node sum, S2 the node-vs-cell cross term, S3 the full double
/// integral (see per_term_bound_check for the three pieces). Each bracket is
/// an L^2 distance contribution, hence >= 0 up to quadrature tolerance.
SeriesResult approximation_error_norm(double x, const GridSpec& grid, const SeriesParams& params);

struct TermBoundCheck {
    unsigned m = 0;
    double s1 = 0.0;  ///< m! * S1, node Riemann sum of the squared stable form
    double s2 = 0.0;  ///< m! * S2, node x cell-integral cross term
    double s3 = 0.0;  ///< m! * S3, full squared-coefficient integral
    double bound = 0.0;  ///< C * m^{-1/2}, C = (1/2pi) * sup_n(n! c_n^2 sqrt(n)) * 2
    bool pass = false;
};

/// Verifies S1, S2, S3 <= C * m^{-1/2} for the given grid and x
/// (m = 0 passes trivially with bound = +infinity).
TermBoundCheck per_term_bound_check(unsigned m, double x, const GridSpec& grid);

/// All checks for m = 0..m_max in one grid sweep (the per-m pieces are
/// independent of the truncation level).
std::vector<TermBoundCheck> per_term_bound_checks(double x, const GridSpec& grid, unsigned m_max);

/// Partial sum of the dominating series sum_m weight(m) * m! * c_m^2 / (2 pi),
/// evaluated in log space. Grows ~ sum m^{alpha - 1/2}: convergent iff
/// alpha < -1/2.
double bounding_series_sum(double alpha, unsigned m_max, WeightConvention convention);

/// Rigorous bound on sum_{m > m_max} weight(m) * m! * c_m^2 / (2 pi):
/// exact partial sum out to a large cutoff plus an integral remainder using
/// m! c_m^2 <= K / sqrt(m), K = 4 sqrt(2) / pi^{3/2}. Returns +infinity for
/// alpha >= -1/2.
double series_tail_bound(double alpha, unsigned m_max, WeightConvention convention);

}  // namespace sheetcurrent
