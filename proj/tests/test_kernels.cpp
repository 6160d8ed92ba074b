#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include <omp.h>

#include "ricci/comparison.hpp"
#include "ricci/flow.hpp"
#include "ricci/kernels.hpp"
#include "ricci/profile.hpp"
#include "ricci/rosenau.hpp"

using namespace ricci;

namespace {
std::vector<double> smooth_u(const ColatitudeGrid& g) {
    std::vector<double> u(g.n() + 1);
    for (int i = 0; i <= g.n(); ++i) {
        u[i] = 0.1 * std::cos(2.0 * g.psi(i)) + 0.04 * std::cos(6.0 * g.psi(i));
    }
    return u;
}
}  // namespace

TEST_CASE("nodewise kernels: parallel path is bit-identical to the serial reference") {
    for (int n : {64, 4096, 16384}) {  // below and above the worksharing cutoff
        ColatitudeGrid g(n);
        const std::vector<double> u = smooth_u(g);
        std::vector<double> a(n + 1), b(n + 1);

        kernels::curvature(g, u, a, Exec::Serial);
        kernels::curvature(g, u, b, Exec::Parallel);
        CHECK(a == b);

        kernels::flow_rhs(g, u, a, Exec::Serial);
        kernels::flow_rhs(g, u, b, Exec::Parallel);
        CHECK(a == b);
    }
}

TEST_CASE("kernel identity: rhs = 1 - K node by node") {
    ColatitudeGrid g(256);
    const std::vector<double> u = smooth_u(g);
    std::vector<double> k(257), r(257);
    kernels::curvature(g, u, k);
    kernels::flow_rhs(g, u, r);
    for (int i = 0; i <= 256; ++i) CHECK(r[i] == doctest::Approx(1.0 - k[i]).epsilon(1e-13));
}

TEST_CASE("results do not depend on the thread count") {
    const int n = 16384;
    ColatitudeGrid g(n);
    const std::vector<double> u = smooth_u(g);
    std::vector<double> one(n + 1), many(n + 1);

    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    kernels::flow_rhs(g, u, one, Exec::Parallel);
    omp_set_num_threads(saved > 1 ? saved : 2);
    kernels::flow_rhs(g, u, many, Exec::Parallel);
    omp_set_num_threads(saved);
    CHECK(one == many);
}

TEST_CASE("profile tabulation: serial and parallel agree bitwise") {
    const AxisymMetric m = rosenau::as_axisym(RosenauState::from_h(1.0), ColatitudeGrid(128));
    const auto xi = comparison_xi_grid(200);
    const IsoperimetricProfile a = build_profile(m, xi, Exec::Serial);
    const IsoperimetricProfile b = build_profile(m, xi, Exec::Parallel);
    CHECK(a.value == b.value);
    CHECK(a.d1 == b.d1);
    CHECK(a.d2 == b.d2);
}

TEST_CASE("monitor: serial and parallel agree bitwise") {
    const AxisymMetric m0 = rosenau::as_axisym(RosenauState::from_h(1.0), ColatitudeGrid(64));
    FlowParams p;
    p.t_end = 0.3;
    p.output_times = {0.0, 0.1, 0.2, 0.3};
    const Trajectory traj = evolve(normalize(m0), p);
    const ComparisonReport a = monitor(traj, 0.0, 200, Exec::Serial);
    const ComparisonReport b = monitor(traj, 0.0, 200, Exec::Parallel);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t j = 0; j < a.records.size(); ++j) {
        CHECK(a.records[j].profile_values == b.records[j].profile_values);
        CHECK(a.records[j].min_profile_margin == b.records[j].min_profile_margin);
        CHECK(a.records[j].l1_deviation == b.records[j].l1_deviation);
        CHECK(a.records[j].sup_dpsi_curvature == b.records[j].sup_dpsi_curvature);
    }
}
