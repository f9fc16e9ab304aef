#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "sheetcurrent/current.hpp"
#include "sheetcurrent/hermite.hpp"
#include "sheetcurrent/mc.hpp"
#include "sheetcurrent/sheet.hpp"
#include "support/oracles.hpp"

using namespace sheetcurrent;

namespace {

std::complex<double> coarse_fourier_on_fine(const SheetPath& fine, unsigned factor, double x) {
    // the fourier current of the grid obtained by keeping every factor-th node
    const std::size_t n = fine.grid.ns() / factor, m = fine.grid.nt() / factor;
    std::complex<double> sum(0.0, 0.0);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < m; ++j) {
            const double w = fine.value(0, i * factor, j * factor);
            const double dh =
                fine.value(0, (i + 1) * factor, j * factor) - fine.value(0, i * factor, j * factor);
            const double dv =
                fine.value(0, i * factor, (j + 1) * factor) - fine.value(0, i * factor, j * factor);
            sum += std::exp(std::complex<double>(0.0, -x * w)) * (dh * dv);
        }
    return sum;
}

}  // namespace

TEST_CASE("exact second moment: closed forms and grid separability") {
    CHECK(fourier_second_moment_exact(GridSpec::uniform(1, 1)) == 0.0);
    CHECK(std::abs(fourier_second_moment_exact(GridSpec::uniform(100, 100)) - 0.245025) < 1e-15);
    for (unsigned n : {10u, 50u, 500u}) {
        const double closed = std::pow((n - 1.0) / (2.0 * n), 2.0);
        CHECK(std::abs(fourier_second_moment_exact(GridSpec::uniform(n, n)) - closed) < 1e-15);
    }
    const GridSpec g = GridSpec::from_nodes({0.0, 0.2, 0.7, 1.0}, {0.0, 0.5, 1.0});
    double direct = 0.0;
    for (std::size_t i = 1; i < g.ns(); ++i)
        for (std::size_t j = 1; j < g.nt(); ++j) direct += g.s(i) * g.t(j) * g.ds(i) * g.dt(j);
    CHECK(fourier_second_moment_exact(g) == doctest::Approx(direct).epsilon(1e-14));
}

TEST_CASE("fourier gap closed form at x = 0 and refinement trend") {
    for (unsigned n : {1u, 4u, 8u, 16u}) {
        const ApproxErrorFourier e = approx_error_fourier_exact(GridSpec::uniform(n, n), 0.0);
        const double closed = 0.25 - std::pow((n - 1.0) / (2.0 * n), 2.0);
        CHECK(e.raw == closed);  // both sides dyadic-exact for n a power of two
        CHECK(e.value == e.raw);
    }
    for (double x : {1.0, 2.0}) {
        double prev = std::numeric_limits<double>::infinity();
        for (unsigned n : {4u, 8u, 16u, 32u}) {
            const ApproxErrorFourier e = approx_error_fourier_exact(GridSpec::uniform(n, n), x);
            CHECK(e.value < prev);
            CHECK(e.value >= 0.0);
            prev = e.value;
        }
    }
}

TEST_CASE("pathwise fourier current") {
    const SheetPath tiny = simulate_sheet(GridSpec::uniform(1, 1), 1, 3);
    CHECK(fourier_current(tiny, 1.3) == std::complex<double>(0.0, 0.0));

    const SheetPath p = simulate_sheet(GridSpec::uniform(12, 9), 1, 99);
    // x = 0: plain increment-product sum
    double plain = 0.0, bound = 0.0;
    for (std::size_t i = 1; i < p.grid.ns(); ++i)
        for (std::size_t j = 1; j < p.grid.nt(); ++j) {
            const double prod =
                p.horizontal_increment(0, i, j) * p.vertical_increment(0, i, j);
            plain += prod;
            bound += std::abs(p.horizontal_increment(0, i, j)) *
                     std::abs(p.vertical_increment(0, i, j));
        }
    const std::complex<double> at0 = fourier_current(p, 0.0);
    CHECK(at0.real() == doctest::Approx(plain).epsilon(1e-13));
    CHECK(at0.imag() == 0.0);
    // pathwise modulus bound
    for (double x : {0.0, 0.5, 2.0})
        CHECK(std::abs(fourier_current(p, x)) <= bound * (1.0 + 1e-12));

    const SheetPath multi = simulate_sheet(GridSpec::uniform(4, 4), 2, 5);
    CHECK_THROWS_AS(fourier_current(multi, 1.0), std::invalid_argument);
}

TEST_CASE("riemann current basics") {
    const SheetPath tiny = simulate_sheet(GridSpec::uniform(1, 1), 1, 3);
    CHECK(riemann_current(tiny, 0.7, 4) == 0.0);

    const SheetPath p = simulate_sheet(GridSpec::uniform(10, 10), 1, 17);
    // zeroth truncation: sum of p_{st}(x) times increment products
    double direct = 0.0;
    for (std::size_t i = 1; i < p.grid.ns(); ++i)
        for (std::size_t j = 1; j < p.grid.nt(); ++j)
            direct += gaussian_kernel(p.grid.s(i) * p.grid.t(j), 0.5) *
                      p.horizontal_increment(0, i, j) * p.vertical_increment(0, i, j);
    CHECK(riemann_current(p, 0.5, 0) == doctest::Approx(direct).epsilon(1e-12));

    const SheetPath multi = simulate_sheet(GridSpec::uniform(4, 4), 2, 5);
    CHECK_THROWS_AS(riemann_current(multi, 0.5, 3), std::invalid_argument);
}

TEST_CASE("riemann current is centered") {
    const GridSpec g = GridSpec::uniform(8, 8);
    const EstimatorResult est = estimate_replicated(
        3000, 7001, 1, [&](std::uint64_t, std::uint64_t seed) -> std::complex<double> {
            return {riemann_current(simulate_sheet(g, 1, seed), 0.5, 6), 0.0};
        });
    CHECK(std::abs(est.mean.real()) <= 4.0 * est.std_error);
}

TEST_CASE("fourier current second moment matches the grid formula") {
    const GridSpec g = GridSpec::uniform(16, 16);
    const double exact = fourier_second_moment_exact(g);
    for (double x : {0.0, 1.0}) {
        const EstimatorResult est = estimate_replicated(
            4000, 31337, 1, [&](std::uint64_t, std::uint64_t seed) -> std::complex<double> {
                return {std::norm(fourier_current(simulate_sheet(g, 1, seed), x)), 0.0};
            });
        CHECK(std::abs(est.mean.real() - exact) <= 4.0 * est.std_error);
    }
}

TEST_CASE("wick oracle agrees with the diagonal grid formula") {
    for (double x : {0.0, 0.7}) {
        const GridSpec g = GridSpec::uniform(5, 4);
        const std::complex<double> cross = oracles::fourier_cross_moment(g, g, x);
        CHECK(cross.real() == doctest::Approx(fourier_second_moment_exact(g)).epsilon(1e-11));
        CHECK(std::abs(cross.imag()) < 1e-12);
    }
    const GridSpec h = GridSpec::from_nodes({0.0, 0.35, 0.6, 1.0}, {0.0, 0.5, 0.75, 1.0});
    const std::complex<double> cross = oracles::fourier_cross_moment(h, h, 1.1);
    CHECK(cross.real() == doctest::Approx(fourier_second_moment_exact(h)).epsilon(1e-11));
}

TEST_CASE("coarse-vs-fine gap matches the wick oracle at 4 SE") {
    const unsigned nc = 8, factor = 4;
    const GridSpec coarse = GridSpec::uniform(nc, nc);
    const GridSpec fine = GridSpec::uniform(nc * factor, nc * factor);
    const double x = 1.0;
    const double exact_diff =
        fourier_second_moment_exact(coarse) + fourier_second_moment_exact(fine) -
        2.0 * oracles::fourier_cross_moment(coarse, fine, x).real();
    const EstimatorResult est = estimate_replicated(
        3000, 90210, 1, [&](std::uint64_t, std::uint64_t seed) -> std::complex<double> {
            const SheetPath p = simulate_sheet(fine, 1, seed);
            const std::complex<double> tf = fourier_current(p, x);
            const std::complex<double> tc = coarse_fourier_on_fine(p, factor, x);
            return {std::norm(tc - tf), 0.0};
        });
    CHECK(std::abs(est.mean.real() - exact_diff) <= 4.0 * est.std_error);
}

TEST_CASE("matrix current components and consistency") {
    const GridSpec g = GridSpec::uniform(6, 6);
    const SheetPath p = simulate_sheet(g, 3, 2718);
    const double xv[] = {0.4, -1.0, 0.9};
    const auto all = multi_fourier_current_all(p, xv);
    for (unsigned i = 1; i <= 3; ++i)
        for (unsigned j = 1; j <= 3; ++j) {
            const std::complex<double> one = multi_fourier_current(p, xv, i, j);
            const std::complex<double> batch = all[(i - 1) * 3 + (j - 1)];
            CHECK(std::abs(one - batch) <= 1e-15 * (1.0 + std::abs(one)));
        }
    CHECK_THROWS_AS(multi_fourier_current(p, xv, 0, 1), std::out_of_range);
    CHECK_THROWS_AS(multi_fourier_current(p, xv, 1, 4), std::out_of_range);
    const double short_x[] = {0.4};
    CHECK_THROWS_AS(multi_fourier_current(p, short_x, 1, 1), std::invalid_argument);

    // d = 1 diagonal coincides with the scalar fourier current
    const SheetPath scalar = simulate_sheet(g, 1, 515);
    const double x1[] = {0.8};
    const std::complex<double> a = multi_fourier_current(scalar, x1, 1, 1);
    const std::complex<double> b = fourier_current(scalar, 0.8);
    CHECK(a.real() == doctest::Approx(b.real()).epsilon(1e-15));
    CHECK(a.imag() == doctest::Approx(b.imag()).epsilon(1e-15));

    // zero frequency: increment-product sums per component pair
    const double zeros[] = {0.0, 0.0, 0.0};
    const auto at0 = multi_fourier_current_all(p, zeros);
    double direct = 0.0;
    for (std::size_t a2 = 1; a2 < g.ns(); ++a2)
        for (std::size_t b2 = 1; b2 < g.nt(); ++b2)
            direct += p.horizontal_increment(1, a2, b2) * p.vertical_increment(2, a2, b2);
    CHECK(at0[1 * 3 + 2].real() == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("sobolev scan: thresholds, limit, and validation") {
    const auto cutoffs = default_sobolev_cutoffs();
    const SobolevScan finite = sobolev_norm_scan(1.0, 1, cutoffs);
    CHECK(finite.verdict == SobolevVerdict::finite);
    CHECK(std::abs(finite.integral_value - std::numbers::pi / 4.0) < 1e-4);
    for (std::size_t k = 1; k < finite.values.size(); ++k)
        CHECK(finite.values[k] >= finite.values[k - 1]);

    const SobolevScan divergent = sobolev_norm_scan(0.4, 1, cutoffs);
    CHECK(divergent.verdict == SobolevVerdict::divergent);
    CHECK(sobolev_norm_scan(2.0, 3, cutoffs).verdict == SobolevVerdict::finite);

    CHECK_THROWS_AS(sobolev_norm_scan(0.0, 1, cutoffs), std::invalid_argument);
    CHECK_THROWS_AS(sobolev_norm_scan(1.0, 0, cutoffs), std::invalid_argument);
    const double bad[] = {10.0, 5.0};
    CHECK_THROWS_AS(sobolev_norm_scan(1.0, 1, bad), std::invalid_argument);
    const double single[] = {10.0};
    CHECK_THROWS_AS(sobolev_norm_scan(1.0, 1, single), std::invalid_argument);
    CHECK(to_string(SobolevVerdict::finite) == "finite");
}
