// Timing harness comparing the serial reference loops against the OpenMP
// worksharing paths on the three data-parallel kernels: nodewise flow RHS,
// profile tabulation over xi samples, and the per-snapshot monitors.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <vector>

#include <omp.h>

#include "ricci/comparison.hpp"
#include "ricci/flow.hpp"
#include "ricci/kernels.hpp"
#include "ricci/profile.hpp"
#include "ricci/rosenau.hpp"

using namespace ricci;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_per_call(const std::function<void()>& fn, int min_reps) {
    fn();  // warm up
    int reps = min_reps;
    for (;;) {
        const auto t0 = clock_type::now();
        for (int r = 0; r < reps; ++r) fn();
        const std::chrono::duration<double> dt = clock_type::now() - t0;
        if (dt.count() > 0.2 || reps >= (1 << 22)) return dt.count() / reps;
        reps *= 4;
    }
}

void report(const char* name, int size, double serial_s, double parallel_s) {
    std::printf("%-24s %9d  %12.3f us  %12.3f us  %6.2fx\n", name, size, serial_s * 1e6,
                parallel_s * 1e6, serial_s / parallel_s);
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-24s %9s  %15s  %15s  %7s\n", "kernel", "size", "serial", "openmp", "speedup");

    for (int n : {256, 4096, 65536, 524288}) {
        ColatitudeGrid g(n);
        std::vector<double> u(n + 1), out(n + 1);
        for (int i = 0; i <= n; ++i) u[i] = 0.1 * std::cos(2.0 * g.psi(i));
        const double ts = seconds_per_call([&] { kernels::flow_rhs(g, u, out, Exec::Serial); }, 4);
        const double tp = seconds_per_call([&] { kernels::flow_rhs(g, u, out, Exec::Parallel); }, 4);
        report("flow_rhs", n, ts, tp);
    }

    {
        const int n = 512;
        ColatitudeGrid g(n);
        const AxisymMetric m = rosenau::as_axisym(RosenauState::from_h(1.0), g);
        const auto xi = comparison_xi_grid(2000);
        const double ts = seconds_per_call([&] { build_profile(m, xi, Exec::Serial); }, 1);
        const double tp = seconds_per_call([&] { build_profile(m, xi, Exec::Parallel); }, 1);
        report("build_profile", 2000, ts, tp);
    }

    {
        const int n = 256;
        ColatitudeGrid g(n);
        FlowParams p;
        p.t_end = 0.2;
        for (int k = 0; k <= 16; ++k) p.output_times.push_back(0.2 * k / 16.0);
        const Trajectory traj = evolve(rosenau::as_axisym(RosenauState::from_h(1.0), g), p);
        const double ts = seconds_per_call([&] { monitor(traj, 0.0, 200, Exec::Serial); }, 1);
        const double tp = seconds_per_call([&] { monitor(traj, 0.0, 200, Exec::Parallel); }, 1);
        report("monitor", 17, ts, tp);
    }
    return 0;
}
