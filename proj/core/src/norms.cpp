#include "sheetcurrent/norms.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "sheetcurrent/hermite.hpp"
#include "sheetcurrent/quadrature.hpp"

namespace sheetcurrent {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kCeiling = 1e12;

struct Kahan {
    double sum = 0.0, c = 0.0;
    void add(double v) {
        const double y = v - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

/// out[m] = (1/2pi) * int_0^1 int_0^1 r_m(x/sqrt(uv))^2 du dv  (= m! * S3).
/// Collapsed to one dimension: int int F(uv) du dv = int_0^1 F(w) ln(1/w) dw,
/// then z = x/sqrt(w) maps it to int_{|x|}^inf r_m(z)^2 ln(z^2/x^2) (2x^2/z^3) dz.
/// The weighted values die off like e^{-z^2/2} pointwise, uniformly in m, so
/// the cutoff |x|+10 loses nothing at double precision; the panel count tracks
/// the O(sqrt(M)) oscillation frequency.
std::vector<double> squared_coeff_integral(double x, unsigned m_max, unsigned order) {
    const std::size_t count = static_cast<std::size_t>(m_max) + 1;
    std::vector<double> out(count, 0.0);
    const std::vector<double> sqrts = sqrt_table(count);
    std::vector<double> r(count);

    if (x == 0.0) {
        hermite_orthonormal_gauss_seq(0.0, r, sqrts);
        for (std::size_t m = 0; m < count; ++m) out[m] = r[m] * r[m] / kTwoPi;
        return out;
    }

    const double ax = std::abs(x);
    const double zmax = std::max(ax + 10.0, 10.0);
    const unsigned panels = std::max<unsigned>(
        24, static_cast<unsigned>(std::ceil(2.0 * (zmax - ax) * std::sqrt(m_max + 1.0) /
                                            std::numbers::pi)));
    const GaussLegendre& gl = gauss_legendre(order);
    const double h = (zmax - ax) / panels;
    const double x2 = x * x;
    for (unsigned p = 0; p < panels; ++p) {
        const double c = ax + (p + 0.5) * h;
        for (unsigned k = 0; k < order; ++k) {
            const double z = c + 0.5 * h * gl.nodes[k];
            const double w =
                0.5 * h * gl.weights[k] * std::log(z * z / x2) * (2.0 * x2 / (z * z * z)) / kTwoPi;
            hermite_orthonormal_gauss_seq(z, r, sqrts);
            for (std::size_t m = 0; m < count; ++m) out[m] += w * r[m] * r[m];
        }
    }
    return out;
}

double log_weighted_bound_term(double alpha, unsigned m, WeightConvention conv) {
    const double base = conv == WeightConvention::OnePlusM ? 1.0 + m : 3.0 + m;
    return alpha * std::log(base) + std::lgamma(static_cast<double>(m) + 1.0) +
           2.0 * log_bound_constant(m);
}

void validate(const SeriesParams& p) {
    if (p.quad_order < 2) throw std::invalid_argument("SeriesParams: quad_order must be >= 2");
}

/// m!-scaled S1, S2, S3 for every m <= m_max on the given grid.
/// S2 cells whose lower-left node touches an axis: the node factor
/// a_m * s^{m+1} t^{m+1} has limit 0, so edge cells contribute nothing; the
/// origin cell instead keeps the moving-node convention rho == 1, which makes
/// the coarsest grid exact at x = 0, m = 0.
void error_norm_pieces(double x, const GridSpec& grid, unsigned m_max, unsigned order_interior,
                       unsigned order_boundary, std::vector<double>& s1, std::vector<double>& s2,
                       std::vector<double>& s3) {
    const std::size_t count = static_cast<std::size_t>(m_max) + 1;
    s3 = squared_coeff_integral(x, m_max, 16);
    s1.assign(count, 0.0);
    s2.assign(count, 0.0);

    const std::vector<double> sqrts = sqrt_table(count);
    std::vector<double> rn(count), ruv(count), acc(count);

    for (std::size_t i = 0; i < grid.ns(); ++i) {
        for (std::size_t j = 0; j < grid.nt(); ++j) {
            const double st = grid.s(i) * grid.t(j);
            const double area = grid.ds(i) * grid.dt(j);
            if (st == 0.0) {
                if (x == 0.0)
                    hermite_orthonormal_gauss_seq(0.0, rn, sqrts);
                else
                    rn.assign(count, 0.0);
            } else {
                hermite_orthonormal_gauss_seq(x / std::sqrt(st), rn, sqrts);
            }
            for (std::size_t m = 0; m < count; ++m) s1[m] += rn[m] * rn[m] * area / kTwoPi;

            const bool corner = i == 0 && j == 0;
            if (st == 0.0 && !corner) continue;  // edge cell: node factor limit is 0
            if (x != 0.0 && corner) continue;    // corner node values vanish off x = 0

            const GaussLegendre& gl = gauss_legendre(corner ? order_boundary : order_interior);
            const unsigned q = static_cast<unsigned>(gl.nodes.size());
            const double cu = grid.s(i) + 0.5 * grid.ds(i), hu = 0.5 * grid.ds(i);
            const double cv = grid.t(j) + 0.5 * grid.dt(j), hv = 0.5 * grid.dt(j);
            acc.assign(count, 0.0);
            for (unsigned a = 0; a < q; ++a) {
                const double u = cu + hu * gl.nodes[a];
                const double wa = hu * gl.weights[a];
                for (unsigned b = 0; b < q; ++b) {
                    const double v = cv + hv * gl.nodes[b];
                    const double wab = wa * hv * gl.weights[b];
                    const double uv = u * v;
                    hermite_orthonormal_gauss_seq(x == 0.0 ? 0.0 : x / std::sqrt(uv), ruv, sqrts);
                    if (corner) {
                        for (std::size_t m = 0; m < count; ++m) acc[m] += wab * ruv[m];
                    } else {
                        const double rs = std::sqrt(st / uv);
                        double rho = rs;  // rs^{m+1}
                        for (std::size_t m = 0; m < count; ++m) {
                            acc[m] += wab * ruv[m] * rho;
                            rho *= rs;
                        }
                    }
                }
            }
            for (std::size_t m = 0; m < count; ++m) s2[m] += rn[m] * acc[m] / kTwoPi;
        }
    }
}

}  // namespace

double series_weight(WeightConvention c, unsigned m, double alpha) {
    return std::pow(c == WeightConvention::OnePlusM ? 1.0 + m : 3.0 + m, alpha);
}

std::string to_string(WeightConvention c) {
    return c == WeightConvention::OnePlusM ? "one_plus_m" : "three_plus_m";
}

SeriesResult watanabe_norm_xi(double x, const SeriesParams& params) {
    validate(params);
    SeriesResult res;
    res.alpha = params.alpha;
    res.convention = params.convention;

    // Truncation: stop at m_max or once the dominating-term bound falls below
    // 1e-14 of the partial sum of bounds (whichever first).
    Kahan bound_partial;
    unsigned m_eff = params.m_max;
    for (unsigned m = 0; m <= params.m_max; ++m) {
        const double bt = std::exp(log_weighted_bound_term(params.alpha, m, params.convention)) / kTwoPi;
        if (m > 0 && bt < 1e-14 * bound_partial.sum) {
            m_eff = m - 1;
            break;
        }
        bound_partial.add(bt);
    }

    const std::vector<double> base = squared_coeff_integral(x, m_eff, params.quad_order);
    res.m_max = m_eff;
    res.terms.reserve(m_eff + 1);
    Kahan partial;
    for (unsigned m = 0; m <= m_eff; ++m) {
        const double term = series_weight(params.convention, m, params.alpha) * base[m];
        res.terms.emplace_back(m, term);
        partial.add(term);
    }
    res.partial_sum = partial.sum;
    res.tail_bound = series_tail_bound(params.alpha, m_eff, params.convention);
    res.converged = std::isfinite(res.tail_bound) && res.partial_sum <= kCeiling;
    return res;
}

SeriesResult approximation_error_norm(double x, const GridSpec& grid, const SeriesParams& params) {
    validate(params);
    SeriesResult res;
    res.alpha = params.alpha;
    res.convention = params.convention;
    res.m_max = params.m_max;

    std::vector<double> s1, s2, s3;
    error_norm_pieces(x, grid, params.m_max, 8, 32, s1, s2, s3);

    res.terms.reserve(params.m_max + 1);
    Kahan partial;
    for (unsigned m = 0; m <= params.m_max; ++m) {
        const double term =
            series_weight(params.convention, m, params.alpha) * (s1[m] - 2.0 * s2[m] + s3[m]);
        res.terms.emplace_back(m, term);
        partial.add(term);
    }
    res.partial_sum = partial.sum;
    // |S1 - 2 S2 + S3| <= 4 * sup piece, each piece <= m! c_m^2 / (2 pi)
    res.tail_bound = 4.0 * series_tail_bound(params.alpha, params.m_max, params.convention);
    res.converged = std::isfinite(res.tail_bound) && std::abs(res.partial_sum) <= kCeiling;
    return res;
}

std::vector<TermBoundCheck> per_term_bound_checks(double x, const GridSpec& grid, unsigned m_max) {
    std::vector<double> s1, s2, s3;
    error_norm_pieces(x, grid, m_max, 8, 32, s1, s2, s3);
    const double C = stirling_limit() / kTwoPi * 2.0;
    std::vector<TermBoundCheck> out(m_max + 1);
    for (unsigned m = 0; m <= m_max; ++m) {
        TermBoundCheck& c = out[m];
        c.m = m;
        c.s1 = s1[m];
        c.s2 = s2[m];
        c.s3 = s3[m];
        c.bound = m == 0 ? std::numeric_limits<double>::infinity()
                         : C / std::sqrt(static_cast<double>(m));
        c.pass = std::abs(c.s1) <= c.bound && std::abs(c.s2) <= c.bound && std::abs(c.s3) <= c.bound;
    }
    return out;
}

TermBoundCheck per_term_bound_check(unsigned m, double x, const GridSpec& grid) {
    return per_term_bound_checks(x, grid, m).back();
}

double bounding_series_sum(double alpha, unsigned m_max, WeightConvention convention) {
    Kahan acc;
    for (unsigned m = 0; m <= m_max; ++m)
        acc.add(std::exp(log_weighted_bound_term(alpha, m, convention)) / kTwoPi);
    return acc.sum;
}

double series_tail_bound(double alpha, unsigned m_max, WeightConvention convention) {
    if (alpha >= -0.5) return std::numeric_limits<double>::infinity();
    const unsigned m_cut = std::max(2 * m_max, m_max + 20000);
    Kahan acc;
    for (unsigned m = m_max + 1; m <= m_cut; ++m)
        acc.add(std::exp(log_weighted_bound_term(alpha, m, convention)));
    // m! c_m^2 <= K m^{-1/2} with K the supremum constant, and the weighted
    // summand is decreasing, so the remainder is under the power integral.
    const double remainder = stirling_limit() * std::pow(static_cast<double>(m_cut), alpha + 0.5) /
                             (-(alpha + 0.5));
    return (acc.sum + remainder) / kTwoPi;
}

}  // namespace sheetcurrent
