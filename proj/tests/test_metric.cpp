#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "ricci/metric.hpp"
#include "ricci/rosenau.hpp"

using namespace ricci;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kFourPi = 4.0 * std::numbers::pi;

AxisymMetric cos_metric(const ColatitudeGrid& g, int mode, double amp) {
    std::vector<double> u(g.n() + 1);
    for (int i = 0; i <= g.n(); ++i) u[i] = amp * std::cos(mode * g.psi(i));
    return AxisymMetric(g, std::move(u), 0.0);
}
}  // namespace

TEST_CASE("grid construction and invariants") {
    CHECK_THROWS_AS(ColatitudeGrid(15), std::invalid_argument);
    CHECK_THROWS_AS(ColatitudeGrid(14), std::invalid_argument);
    CHECK_THROWS_AS(ColatitudeGrid(17), std::invalid_argument);

    ColatitudeGrid g(64);
    CHECK(g.psi(0) == 0.0);
    CHECK(g.psi(64) == kPi);
    CHECK(g.spacing() == doctest::Approx(kPi / 64).epsilon(1e-15));
    // mirrored tables are exactly symmetric
    for (int i = 0; i <= 32; ++i) {
        CHECK(g.psi(64 - i) == kPi - g.psi(i));
    }
    for (int i = 0; i <= 64; ++i) {
        CHECK(g.cell_measure(64 - i) == g.cell_measure(i));
    }
    // cell measures integrate sin exactly
    double sum = 0.0;
    for (int i = 0; i <= 64; ++i) sum += g.cell_measure(i);
    CHECK(sum == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("metric construction rejects bad input") {
    ColatitudeGrid g(16);
    CHECK_THROWS_AS(AxisymMetric(g, std::vector<double>(16, 0.0), 0.0), std::invalid_argument);
    std::vector<double> big(17, 51.0);
    CHECK_THROWS_AS(AxisymMetric(g, big, 0.0), std::invalid_argument);
    std::vector<double> nan(17, std::nan(""));
    CHECK_THROWS_AS(AxisymMetric(g, nan, 0.0), std::invalid_argument);
}

TEST_CASE("curvature of the round sphere is exactly 1") {
    ColatitudeGrid g(64);
    const AxisymMetric m(g, std::vector<double>(65, 0.0), 0.0);
    const CurvatureField k = gauss_curvature(m);
    for (double v : k.k_samples) CHECK(v == 1.0);
}

TEST_CASE("curvature of a constant conformal factor rescales") {
    ColatitudeGrid g(32);
    const double c = 0.37;
    const AxisymMetric m(g, std::vector<double>(33, c), 0.0);
    const CurvatureField k = gauss_curvature(m);
    for (double v : k.k_samples) CHECK(v == doctest::Approx(std::exp(-2.0 * c)).epsilon(1e-14));
}

TEST_CASE("curvature of the Rosenau metric matches the closed form") {
    // closed form itself is validated in test_rosenau against finite
    // differences of the cylinder conformal factor
    const RosenauState s = RosenauState::from_h(1.0);
    const double k_pole = 1.0 * std::cosh(1.0) / std::sinh(1.0);     // h coth h
    const double k_equator = 1.0 / std::sinh(1.0);
    for (int n : {128, 256}) {
        ColatitudeGrid g(n);
        const AxisymMetric m = rosenau::as_axisym(s, g);
        const CurvatureField k = gauss_curvature(m);
        const double tol = 2.0 * std::pow(kPi / n, 2);
        CHECK(std::abs(k.k_samples[0] - k_pole) < tol);
        CHECK(std::abs(k.k_samples[n] - k_pole) < tol);
        CHECK(std::abs(k.k_samples[n / 2] - k_equator) < tol);
    }
}

TEST_CASE("curvature converges at second order") {
    const RosenauState s = RosenauState::from_h(1.0);
    auto linf = [&](int n) {
        ColatitudeGrid g(n);
        const AxisymMetric m = rosenau::as_axisym(s, g);
        const CurvatureField k = gauss_curvature(m);
        double e = 0.0;
        for (int i = 0; i <= n; ++i) {
            e = std::max(e, std::abs(k.k_samples[i] - rosenau::curvature_colatitude(s, g.psi(i))));
        }
        return e;
    };
    const double e64 = linf(64), e128 = linf(128), e256 = linf(256);
    CHECK(e64 / e128 > 3.4);
    CHECK(e64 / e128 < 4.6);
    CHECK(e128 / e256 > 3.4);
    CHECK(e128 / e256 < 4.6);
}

TEST_CASE("total area: round sphere and constant rescaling") {
    // Simpson's O(dpsi^4) truncation is the only error here
    ColatitudeGrid g(64);
    const AxisymMetric round(g, std::vector<double>(65, 0.0), 0.0);
    CHECK(std::abs(total_area(round) - kFourPi) < 1e-6);

    const AxisymMetric doubled(g, std::vector<double>(65, 0.5 * std::numbers::ln2), 0.0);
    CHECK(std::abs(total_area(doubled) - 8.0 * kPi) < 2e-6);
    CHECK(total_area(doubled) == doctest::Approx(2.0 * total_area(round)).epsilon(1e-14));

    ColatitudeGrid fine(512);
    const AxisymMetric round_fine(fine, std::vector<double>(513, 0.0), 0.0);
    CHECK(std::abs(total_area(round_fine) - kFourPi) < 1e-10);
}

TEST_CASE("total area against an adaptive quadrature oracle") {
    // independent oracle value for u = 0.1 cos(2 psi)
    const double expected = 2.0 * kPi * oracles::integrate(
        [](double s) { return std::exp(0.2 * std::cos(2.0 * s)) * std::sin(s); }, 0.0, kPi, 1e-13);
    ColatitudeGrid g(512);
    const double got = total_area(cos_metric(g, 2, 0.1));
    CHECK(std::abs(got - expected) < 1e-9);
    // frozen reference from 50-digit evaluation of the same integral
    CHECK(expected == doctest::Approx(11.84186780394283763634).epsilon(1e-12));
}

TEST_CASE("normalize shifts to area 4 pi and is idempotent") {
    ColatitudeGrid g(64);
    const AxisymMetric shifted(g, std::vector<double>(65, 0.9), 0.0);
    const AxisymMetric back = normalize(shifted);
    // residual u is the quadrature error of the sin integral, not zero
    for (double v : back.u()) CHECK(std::abs(v) < 1e-7);
    CHECK(std::abs(total_area(back) - kFourPi) < 1e-10);

    const AxisymMetric m = cos_metric(g, 2, 0.1);
    const AxisymMetric n1 = normalize(m);
    CHECK(std::abs(total_area(n1) - kFourPi) < 1e-10);
    const AxisymMetric n2 = normalize(n1);
    for (int i = 0; i <= 64; ++i) {
        CHECK(n1.u(i) == doctest::Approx(n2.u(i)).epsilon(1e-15));
    }
}

TEST_CASE("discrete Gauss-Bonnet holds to rounding on every metric") {
    for (int n : {64, 128, 256}) {
        ColatitudeGrid g(n);
        const AxisymMetric f2 = normalize(cos_metric(g, 2, 0.1));
        const AxisymMetric f4 = cos_metric(g, 4, 0.5);
        const AxisymMetric ros = rosenau::as_axisym(RosenauState::from_h(2.0), g);
        for (const AxisymMetric* m : {&f2, &f4, &ros}) {
            CHECK(std::abs(total_curvature(*m) - kFourPi) < 1e-10);
        }
    }
}

TEST_CASE("curvature commutes with reflection for reflected data") {
    ColatitudeGrid g(48);
    std::vector<double> u(49);
    for (int i = 0; i <= 48; ++i) {
        u[i] = 0.08 * std::cos(2.0 * g.psi(i)) - 0.03 * std::cos(4.0 * g.psi(i));
    }
    std::vector<double> ur(u.rbegin(), u.rend());
    const CurvatureField k = gauss_curvature(AxisymMetric(g, u, 0.0));
    const CurvatureField kr = gauss_curvature(AxisymMetric(g, ur, 0.0));
    for (int i = 0; i <= 48; ++i) CHECK(k.k_samples[i] == kr.k_samples[48 - i]);
}

TEST_CASE("pole regularity defect vanishes linearly for smooth data") {
    for (int n : {64, 128}) {
        ColatitudeGrid g(n);
        CHECK(pole_regularity_defect(cos_metric(g, 2, 0.3)) < 2.0 * kPi / n);
    }
}

TEST_CASE("Ritore criterion") {
    ColatitudeGrid g(128);
    const AxisymMetric round(g, std::vector<double>(129, 0.0), 0.0);
    CHECK(ritore_criterion(round).satisfied);  // constant K counts as non-increasing

    for (double h : {0.25, 1.0, 4.0}) {
        CHECK(ritore_criterion(rosenau::as_axisym(RosenauState::from_h(h), g)).satisfied);
    }

    const AxisymMetric bad = normalize(cos_metric(g, 4, 0.5));
    const RitoreCheck check = ritore_criterion(bad);
    CHECK_FALSE(check.satisfied);
    // direct scan oracle for the first violating node
    const CurvatureField k = gauss_curvature(bad);
    int expected = -1;
    for (int i = 0; i <= 128 && expected < 0; ++i) {
        if (!(k.k_samples[i] > 0.0)) expected = i;
    }
    for (int i = 1; i <= 64 && expected < 0; ++i) {
        if (k.k_samples[i] > k.k_samples[i - 1]) expected = i;
    }
    CHECK(check.first_violation == expected);
}
