#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "ricci/flow.hpp"
#include "ricci/rosenau.hpp"

using namespace ricci;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kFourPi = 4.0 * std::numbers::pi;

AxisymMetric fourier_metric(const ColatitudeGrid& g, int mode, double amp) {
    std::vector<double> u(g.n() + 1);
    for (int i = 0; i <= g.n(); ++i) u[i] = amp * std::cos(mode * g.psi(i));
    return normalize(AxisymMetric(g, std::move(u), 0.0));
}
}  // namespace

TEST_CASE("rhs vanishes identically on the round sphere") {
    ColatitudeGrid g(64);
    const auto r = flow_rhs(AxisymMetric(g, std::vector<double>(65, 0.0), 0.0));
    for (double v : r) CHECK(v == 0.0);
}

TEST_CASE("rhs of a constant factor is spatially constant relaxation") {
    ColatitudeGrid g(32);
    const double c = 0.21;
    const auto r = flow_rhs(AxisymMetric(g, std::vector<double>(33, c), 0.0));
    for (double v : r) CHECK(v == doctest::Approx(1.0 - std::exp(-2.0 * c)).epsilon(1e-14));
}

TEST_CASE("rhs matches the time derivative of the Rosenau conformal factor") {
    const int n = 256;
    ColatitudeGrid g(n);
    const AxisymMetric m = rosenau::as_axisym(RosenauState::from_h(1.0), g);
    const auto r = flow_rhs(m);

    // oracle: differentiate u(psi, t) of the closed form in t numerically
    double worst = 0.0;
    for (int i = 0; i <= n; i += 8) {
        const double psi = g.psi(i);
        auto u_of_t = [&](double t) {
            ColatitudeGrid g1(n);
            const AxisymMetric mt = rosenau::as_axisym(RosenauState::from_time(t), g1);
            return mt.u(i);
        };
        (void)psi;
        const double dudt = oracles::derivative(u_of_t, 0.0, 1e-2);
        worst = std::max(worst, std::abs(r[i] - dudt));
    }
    CHECK(worst < 2.0 * std::pow(kPi / n, 2));
}

TEST_CASE("step leaves the round sphere fixed") {
    ColatitudeGrid g(64);
    const AxisymMetric round(g, std::vector<double>(65, 0.0), 0.0);
    // without the area projection the state is bitwise stationary
    const AxisymMetric plain = flow_step(round, 0.1, false);
    for (double v : plain.u()) CHECK(v == 0.0);
    // with projection, a normalized round state moves by rounding only
    const AxisymMetric start = normalize(round);
    const AxisymMetric after = flow_step(start, 0.1, true);
    for (int i = 0; i <= 64; ++i) CHECK(std::abs(after.u(i) - start.u(i)) < 1e-12);
}

TEST_CASE("step is fourth order (Richardson ratio about 16)") {
    // coarse grid and a sub-CFL step: all modes sit in the dt^5 regime while
    // the step differences stay far above rounding
    ColatitudeGrid g(32);
    const AxisymMetric m = rosenau::as_axisym(RosenauState::from_h(1.0), g);
    const double dt = 0.5 * stability_dt(m, 0.5);
    auto dist = [&](const AxisymMetric& a, const AxisymMetric& b) {
        double d = 0.0;
        for (int i = 0; i <= 32; ++i) d = std::max(d, std::abs(a.u(i) - b.u(i)));
        return d;
    };
    const AxisymMetric full = flow_step(m, dt, false);
    const AxisymMetric halves = flow_step(flow_step(m, dt / 2, false), dt / 2, false);
    AxisymMetric quarters = m;
    for (int k = 0; k < 4; ++k) quarters = flow_step(quarters, dt / 4, false);
    const double ratio = dist(full, halves) / dist(halves, quarters);
    CHECK(ratio > 16.0 * 0.7);
    CHECK(ratio < 16.0 * 1.3);
}

TEST_CASE("stability_dt formula and scalings") {
    ColatitudeGrid g(128);
    const AxisymMetric round(g, std::vector<double>(129, 0.0), 0.0);
    CHECK(stability_dt(round, 0.5) ==
          doctest::Approx(0.5 * std::pow(kPi / 128, 2) / 4.0).epsilon(1e-14));
    CHECK(stability_dt(round, 0.5) == doctest::Approx(7.53e-5).epsilon(1e-3));

    ColatitudeGrid g2(64);
    const AxisymMetric round2(g2, std::vector<double>(65, 0.0), 0.0);
    CHECK(stability_dt(round2, 0.5) == doctest::Approx(4.0 * stability_dt(round, 0.5)).epsilon(1e-14));

    const AxisymMetric deeper(g, std::vector<double>(129, -0.5), 0.0);
    CHECK(stability_dt(deeper, 0.5) < stability_dt(round, 0.5));
}

TEST_CASE("stability sweep: no blowup over t in [0,3] on the perturbed metric") {
    ColatitudeGrid g(64);
    FlowParams p;
    p.t_end = 3.0;
    p.output_times = {0.0, 1.0, 2.0, 3.0};
    const Trajectory traj = evolve(fourier_metric(g, 2, 0.1), p);
    CHECK_FALSE(traj.blew_up);
    for (const auto& snap : traj.snapshots) {
        for (double v : snap.u()) CHECK(std::isfinite(v));
    }
}

TEST_CASE("round sphere stays fixed under evolve") {
    ColatitudeGrid g(64);
    FlowParams p;
    p.t_end = 1.0;
    p.output_times = {0.5, 1.0};
    std::vector<double> zero(65, 0.0);
    const AxisymMetric m0 = normalize(AxisymMetric(g, zero, 0.0));
    const double u0 = m0.u(0);  // quadrature-level normalize shift, constant in psi
    const Trajectory traj = evolve(m0, p);
    for (const auto& snap : traj.snapshots) {
        for (double v : snap.u()) {
            CHECK(std::abs(v) < 1e-7);
            CHECK(std::abs(v - u0) < 1e-10);  // no drift beyond the initial shift
        }
    }
}

TEST_CASE("snapshots land exactly on requested output times") {
    ColatitudeGrid g(32);
    FlowParams p;
    p.t_end = 0.31;
    p.output_times = {0.0, 0.1, 0.17, 0.31};
    const Trajectory traj = evolve(fourier_metric(g, 2, 0.1), p);
    REQUIRE(traj.snapshots.size() == 4);
    for (std::size_t j = 0; j < 4; ++j) CHECK(traj.snapshots[j].time() == p.output_times[j]);
}

TEST_CASE("area conservation with and without renormalization") {
    ColatitudeGrid g(64);
    FlowParams p;
    p.t_end = 1.0;
    p.output_times = {0.25, 0.5, 1.0};
    const Trajectory renorm = evolve(fourier_metric(g, 2, 0.1), p);
    for (const auto& snap : renorm.snapshots) {
        CHECK(std::abs(total_area(snap) - kFourPi) < 1e-10);
    }

    FlowParams p2 = p;
    p2.renormalize_each_step = false;
    const Trajectory drift = evolve(fourier_metric(g, 2, 0.1), p2);
    // without the projection the drift stays at the scheme's own error level
    for (const auto& snap : drift.snapshots) {
        CHECK(std::abs(total_area(snap) - kFourPi) < 1e-5);
    }
}

TEST_CASE("positivity of curvature is preserved") {
    ColatitudeGrid g(64);
    FlowParams p;
    p.t_end = 2.0;
    p.output_times = {0.0, 0.5, 1.0, 2.0};
    const Trajectory traj = evolve(fourier_metric(g, 2, 0.1), p);
    REQUIRE(gauss_curvature(traj.snapshots.front()).min() > 0.0);
    for (const auto& snap : traj.snapshots) {
        CHECK(gauss_curvature(snap).min() > -1e-8);
    }
}

TEST_CASE("lower curvature barrier along a sign-indefinite run") {
    ColatitudeGrid g(64);
    FlowParams p;
    p.t_end = 1.5;
    p.output_times = {0.1, 0.5, 1.0, 1.5};
    const Trajectory traj = evolve(fourier_metric(g, 2, 0.6), p);
    CHECK(gauss_curvature(fourier_metric(g, 2, 0.6)).min() < 0.0);  // sign-indefinite start
    for (const auto& snap : traj.snapshots) {
        const double barrier = -1.0 / (std::exp(snap.time()) - 1.0);
        CHECK(gauss_curvature(snap).min() >= barrier - 1e-6);
    }
}

TEST_CASE("reflection symmetry is preserved bitwise") {
    ColatitudeGrid g(64);
    FlowParams p;
    p.t_end = 0.5;
    p.output_times = {0.5};
    const Trajectory traj = evolve(fourier_metric(g, 2, 0.1), p);
    const auto& u = traj.snapshots.back().u();
    for (int i = 0; i <= 64; ++i) CHECK(u[i] == u[64 - i]);
}

TEST_CASE("blowup aborts with the last good snapshot") {
    ColatitudeGrid g(64);
    FlowParams p;
    p.t_end = 1.0;
    p.output_times = {1.0};
    p.blowup_max_curvature = 1.2;  // below the actual max K of the data
    const Trajectory traj = evolve(fourier_metric(g, 2, 0.1), p);
    CHECK(traj.blew_up);
    REQUIRE_FALSE(traj.snapshots.empty());
    for (double v : traj.snapshots.back().u()) CHECK(std::isfinite(v));
    CHECK(traj.blowup_time <= 1.0);
}

TEST_CASE("parameter validation") {
    ColatitudeGrid g(32);
    const AxisymMetric m(g, std::vector<double>(33, 0.0), 0.0);
    FlowParams p;
    p.safety = 1.5;
    p.t_end = 1.0;
    CHECK_THROWS_AS(evolve(m, p), std::invalid_argument);
    p.safety = 0.5;
    p.output_times = {0.5, 0.5};
    CHECK_THROWS_AS(evolve(m, p), std::invalid_argument);
    p.output_times = {2.0};
    CHECK_THROWS_AS(evolve(m, p), std::invalid_argument);
    CHECK_THROWS_AS(flow_step(m, -0.1), std::invalid_argument);
}

TEST_CASE("a sign error in the rhs would be caught by the Rosenau oracle") {
    // guard for the oracle itself: flipping the sign of the relaxation term
    // moves the rhs far outside the tolerance the oracle test enforces
    const int n = 64;
    ColatitudeGrid g(n);
    const AxisymMetric m = rosenau::as_axisym(RosenauState::from_h(1.0), g);
    const auto r = flow_rhs(m);
    std::vector<double> wrong(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        const double e = std::exp(-2.0 * m.u(static_cast<int>(i)));
        wrong[i] = r[i] - 2.0 * (1.0 - e);  // rhs with the sign of (1 - e^{-2u}) flipped
    }
    auto u_of_t = [&](double t) {
        return rosenau::as_axisym(RosenauState::from_time(t), ColatitudeGrid(n)).u(n / 2);
    };
    const double dudt = oracles::derivative(u_of_t, 0.0, 1e-2);
    CHECK(std::abs(r[n / 2] - dudt) < 2.0 * std::pow(kPi / n, 2));
    CHECK(std::abs(wrong[n / 2] - dudt) > 100.0 * std::pow(kPi / n, 2));
}
