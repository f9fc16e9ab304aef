#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "sheetcurrent/quadrature.hpp"

using namespace sheetcurrent;

TEST_CASE("rule structure: symmetry and weight sum") {
    for (unsigned order : {1u, 2u, 5u, 8u, 16u, 32u, 64u}) {
        const GaussLegendre& gl = gauss_legendre(order);
        REQUIRE(gl.nodes.size() == order);
        double wsum = 0.0;
        for (unsigned k = 0; k < order; ++k) {
            wsum += gl.weights[k];
            CHECK(gl.nodes[k] == doctest::Approx(-gl.nodes[order - 1 - k]).epsilon(1e-14));
            CHECK(gl.weights[k] == doctest::Approx(gl.weights[order - 1 - k]).epsilon(1e-14));
            if (k > 0) CHECK(gl.nodes[k] > gl.nodes[k - 1]);
        }
        CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    }
    CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
}

TEST_CASE("polynomial exactness up to degree 2n-1") {
    for (unsigned order : {2u, 4u, 7u, 12u}) {
        const GaussLegendre& gl = gauss_legendre(order);
        for (unsigned deg = 0; deg <= 2 * order - 1; ++deg) {
            double val = 0.0;
            for (unsigned k = 0; k < order; ++k)
                val += gl.weights[k] * std::pow(gl.nodes[k], static_cast<double>(deg));
            const double exact = deg % 2 == 1 ? 0.0 : 2.0 / (deg + 1.0);
            CHECK(val == doctest::Approx(exact).epsilon(1e-13));
        }
    }
}

TEST_CASE("tensor quadrature on the unit square") {
    const Rect unit{0.0, 1.0, 0.0, 1.0};
    const QuadResult one = quad_2d([](double, double) { return 1.0; }, unit);
    CHECK(one.value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(one.converged);

    const QuadResult uv = quad_2d([](double u, double v) { return u * v; }, unit);
    CHECK(uv.value == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(uv.converged);

    const QuadResult root =
        quad_2d([](double u, double v) { return std::sqrt(u * v); }, unit, 64, 1e-6);
    CHECK(root.value == doctest::Approx(4.0 / 9.0).epsilon(1e-6));
    CHECK(root.converged);

    const QuadResult rough =
        quad_2d([](double u, double v) { return std::sqrt(u * v); }, unit, 2, 1e-12);
    CHECK_FALSE(rough.converged);

    CHECK_THROWS_AS(quad_2d([](double, double) { return 1.0; }, unit, 1), std::invalid_argument);
}

TEST_CASE("general rectangles and composite panels") {
    const Rect r{0.5, 2.0, -1.0, 1.0};
    CHECK(quad_rect([](double u, double v) { return u + v; }, r, 8) ==
          doctest::Approx(1.5 * 2.0 * 1.25).epsilon(1e-13));
    const double e1 = quad_1d_panels([](double x) { return std::exp(x); }, 0.0, 1.0, 4, 8);
    CHECK(e1 == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-13));
}
