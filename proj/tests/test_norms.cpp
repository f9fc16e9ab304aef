#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "sheetcurrent/hermite.hpp"
#include "sheetcurrent/norms.hpp"
#include "sheetcurrent/quadrature.hpp"

using namespace sheetcurrent;

namespace {
constexpr double kInv2Pi = 1.0 / (2.0 * std::numbers::pi);
SeriesParams params(double alpha, unsigned m_max,
                    WeightConvention conv = WeightConvention::OnePlusM) {
    SeriesParams p;
    p.alpha = alpha;
    p.m_max = m_max;
    p.convention = conv;
    return p;
}
}  // namespace

TEST_CASE("series weights and conventions") {
    CHECK(series_weight(WeightConvention::OnePlusM, 0, -0.6) == 1.0);
    CHECK(series_weight(WeightConvention::ThreePlusM, 1, 2.0) == doctest::Approx(16.0));
    CHECK(to_string(WeightConvention::ThreePlusM) == "three_plus_m");
}

TEST_CASE("level-zero term is the universal constant at x = 0") {
    for (double alpha : {-0.6, -1.5, 0.3}) {
        const SeriesResult r = watanabe_norm_xi(0.0, params(alpha, 8));
        CHECK(r.terms[0].second == doctest::Approx(kInv2Pi).epsilon(1e-14));
        for (unsigned m = 1; m <= 8; m += 2) CHECK(r.terms[m].second == 0.0);
        for (const auto& [m, v] : r.terms) CHECK(v >= 0.0);
    }
}

TEST_CASE("squared-coefficient integrals match the tensor quadrature route") {
    // alpha = 0 under (1+m)^alpha makes every weight 1: terms are the bare
    // integrals (1/2pi) int int r_m(x/sqrt(uv))^2 du dv
    for (double x : {0.5, 1.0, 2.0}) {
        const SeriesResult r = watanabe_norm_xi(x, params(0.0, 6));
        const auto sq = sqrt_table(7);
        for (unsigned m = 0; m <= 6; ++m) {
            const QuadResult q = quad_2d(
                [&](double u, double v) {
                    std::vector<double> rr(m + 1);
                    hermite_orthonormal_gauss_seq(x / std::sqrt(u * v), rr, sq);
                    return rr[m] * rr[m] * kInv2Pi;
                },
                Rect{0.0, 1.0, 0.0, 1.0}, 64, 1e-8);
            CHECK(q.converged);
            CHECK(r.terms[m].second == doctest::Approx(q.value).epsilon(1e-7));
        }
    }
}

TEST_CASE("partial sums stabilize inside the reported tail bound") {
    const SeriesResult r200 = watanabe_norm_xi(0.5, params(-0.6, 200));
    const SeriesResult r400 = watanabe_norm_xi(0.5, params(-0.6, 400));
    CHECK(r200.converged);
    CHECK(r400.partial_sum >= r200.partial_sum);
    CHECK(r400.partial_sum - r200.partial_sum <= r200.tail_bound);
    CHECK(r200.tail_bound > 0.0);
}

TEST_CASE("divergent weight exponents are flagged, not thrown") {
    const SeriesResult r = watanabe_norm_xi(0.5, params(-0.4, 50));
    CHECK_FALSE(r.converged);
    CHECK(std::isinf(r.tail_bound));
    CHECK(std::isinf(series_tail_bound(-0.4, 100, WeightConvention::OnePlusM)));
    CHECK(std::isinf(series_tail_bound(-0.5, 100, WeightConvention::OnePlusM)));
    CHECK(std::isfinite(series_tail_bound(-0.6, 100, WeightConvention::OnePlusM)));
}

TEST_CASE("bounding series behaves like sum m^(alpha - 1/2)") {
    const double g = bounding_series_sum(-0.4, 10000, WeightConvention::OnePlusM) /
                     bounding_series_sum(-0.4, 1000, WeightConvention::OnePlusM);
    CHECK(g > 1.10);
    const double h = bounding_series_sum(-0.6, 10000, WeightConvention::OnePlusM) /
                     bounding_series_sum(-0.6, 1000, WeightConvention::OnePlusM);
    // terms ~ m^{-1.1}: convergent but slow, so the decade ratio stays well
    // below the divergent-side ratio while exceeding 1
    CHECK(h > 1.0);
    CHECK(h < 1.2);
    CHECK(g > h);
}

TEST_CASE("coarsest grid is exact at x = 0 for the zeroth level") {
    const SeriesResult r = approximation_error_norm(0.0, GridSpec::uniform(1, 1), params(-0.6, 0));
    CHECK(std::abs(r.terms[0].second) < 1e-12);
}

TEST_CASE("grid refinement shrinks the error norm") {
    const double x = 0.5;
    double prev = std::numeric_limits<double>::infinity();
    for (unsigned n : {8u, 32u}) {
        const SeriesResult r =
            approximation_error_norm(x, GridSpec::uniform(n, n), params(-0.6, 48, WeightConvention::ThreePlusM));
        CHECK(r.partial_sum < prev);
        for (const auto& [m, v] : r.terms) CHECK(v >= -1e-10);
        prev = r.partial_sum;
    }
}

TEST_CASE("weight conventions differ by the exact termwise factor") {
    const GridSpec g = GridSpec::uniform(8, 8);
    const SeriesResult one = approximation_error_norm(0.5, g, params(-0.6, 16, WeightConvention::OnePlusM));
    const SeriesResult three =
        approximation_error_norm(0.5, g, params(-0.6, 16, WeightConvention::ThreePlusM));
    for (unsigned m = 0; m <= 16; ++m) {
        const double factor = std::pow((3.0 + m) / (1.0 + m), -0.6);
        if (std::abs(one.terms[m].second) < 1e-300) continue;
        CHECK(three.terms[m].second / one.terms[m].second ==
              doctest::Approx(factor).epsilon(1e-12));
    }
}

TEST_CASE("per-term grid sums respect the m^(-1/2) envelope") {
    const GridSpec g = GridSpec::uniform(16, 16);
    const auto checks = per_term_bound_checks(0.0, g, 64);
    for (unsigned m = 1; m <= 64; ++m) {
        CHECK(checks[m].pass);
        CHECK(checks[m].s1 >= 0.0);
        CHECK(checks[m].s3 >= 0.0);
    }
    CHECK(checks[0].s3 == doctest::Approx(kInv2Pi).epsilon(1e-12));
    const TermBoundCheck single = per_term_bound_check(5, 0.0, g);
    CHECK(single.s1 == doctest::Approx(checks[5].s1).epsilon(1e-14));
    CHECK(single.s2 == doctest::Approx(checks[5].s2).epsilon(1e-14));
    CHECK(single.s3 == doctest::Approx(checks[5].s3).epsilon(1e-14));
    CHECK(per_term_bound_check(0, 0.5, g).pass);
}

TEST_CASE("quad order validation") {
    SeriesParams p;
    p.quad_order = 1;
    CHECK_THROWS_AS(watanabe_norm_xi(0.0, p), std::invalid_argument);
}
