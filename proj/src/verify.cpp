#include "ricci/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ricci/comparison.hpp"
#include "ricci/flow.hpp"
#include "ricci/metric.hpp"
#include "ricci/profile.hpp"
#include "ricci/rosenau.hpp"
#include "ricci/tolerance.hpp"

namespace ricci {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFourPi = 4.0 * std::numbers::pi;

std::string num(double v) {
    std::ostringstream ss;
    ss.precision(3);
    ss << v;
    return ss.str();
}

AxisymMetric fourier_metric(const ColatitudeGrid& g, int mode, double amp) {
    std::vector<double> u(g.n() + 1);
    for (int i = 0; i <= g.n(); ++i) u[i] = amp * std::cos(mode * g.psi(i));
    return normalize(AxisymMetric(g, std::move(u), 0.0));
}

struct Suite {
    std::vector<VerifyResult> results;

    void check(const std::string& name, bool pass, const std::string& detail) {
        results.push_back({name, pass, detail});
    }

    // value must be below bound
    void below(const std::string& name, double value, double bound) {
        check(name, value <= bound, num(value) + " (bound " + num(bound) + ")");
    }

    void in_range(const std::string& name, double value, double lo, double hi) {
        check(name, value >= lo && value <= hi,
              num(value) + " (range [" + num(lo) + ", " + num(hi) + "])");
    }
};

double linf_curvature_error_vs_rosenau(int n, double h_param) {
    ColatitudeGrid g(n);
    const RosenauState s = RosenauState::from_h(h_param);
    const AxisymMetric m = rosenau::as_axisym(s, g);
    const CurvatureField k = gauss_curvature(m);
    double err = 0.0;
    for (int i = 0; i <= n; ++i) {
        err = std::max(err, std::abs(k.k_samples[i] - rosenau::curvature_colatitude(s, g.psi(i))));
    }
    return err;
}

double cap_variation_worst(int n) {
    ColatitudeGrid g(n);
    const AxisymMetric m = fourier_metric(g, 2, 0.1);
    double worst = 0.0;
    for (double psi : {0.5, 1.0, kPi / 2, 2.2}) {
        const CapVariationResidual r = cap_variation_check(m, psi);
        worst = std::max({worst, std::abs(r.area_rate), std::abs(r.length_rate)});
    }
    return worst;
}

}  // namespace

std::vector<VerifyResult> run_verification(int n) {
    Suite s;
    ColatitudeGrid grid(n);
    const double h = grid.spacing();

    // --- metric ---
    {
        std::vector<double> zero(n + 1, 0.0);
        const AxisymMetric round(grid, zero, 0.0);
        const CurvatureField k = gauss_curvature(round);
        double dev = 0.0;
        for (double v : k.k_samples) dev = std::max(dev, std::abs(v - 1.0));
        s.check("metric.round_curvature_exact", dev == 0.0, "max|K-1| = " + num(dev));

        std::vector<double> cvec(n + 1, 0.3);
        const CurvatureField kc = gauss_curvature(AxisymMetric(grid, cvec, 0.0));
        double devc = 0.0;
        for (double v : kc.k_samples) devc = std::max(devc, std::abs(v - std::exp(-0.6)));
        s.below("metric.constant_rescale", devc, 1e-15);

        s.below("metric.round_area", std::abs(total_area(round) - kFourPi), 1e-8);
        std::vector<double> half_log2(n + 1, 0.5 * std::numbers::ln2);
        s.below("metric.area_scaling",
                std::abs(total_area(AxisymMetric(grid, half_log2, 0.0)) - 8.0 * kPi), 2e-8);
    }
    {
        const AxisymMetric m = fourier_metric(grid, 2, 0.1);
        s.below("metric.gauss_bonnet_fourier", std::abs(total_curvature(m) - kFourPi), 1e-10);
        const AxisymMetric r = rosenau::as_axisym(RosenauState::from_h(1.0), grid);
        s.below("metric.gauss_bonnet_rosenau", std::abs(total_curvature(r) - kFourPi), 1e-10);

        const AxisymMetric mn = normalize(m);
        const AxisymMetric mnn = normalize(mn);
        double dev = 0.0;
        for (int i = 0; i <= n; ++i) dev = std::max(dev, std::abs(mn.u(i) - mnn.u(i)));
        s.below("metric.normalize_idempotent", dev, 1e-14);
        s.below("metric.normalized_area", std::abs(total_area(mn) - kFourPi), 1e-10);
        s.below("metric.pole_regularity", pole_regularity_defect(m), 2.0 * h);
    }
    {
        // reflection commutes bitwise with the curvature operator
        std::vector<double> u(n + 1);
        for (int i = 0; i <= n; ++i) {
            u[i] = 0.07 * std::cos(2 * grid.psi(i)) + 0.05 * std::cos(4 * grid.psi(i));
        }
        std::vector<double> ur(u.rbegin(), u.rend());
        const CurvatureField k = gauss_curvature(AxisymMetric(grid, u, 0.0));
        const CurvatureField kr = gauss_curvature(AxisymMetric(grid, ur, 0.0));
        bool same = true;
        for (int i = 0; i <= n; ++i) same = same && (k.k_samples[i] == kr.k_samples[n - i]);
        s.check("metric.reflection_commutes", same, same ? "bitwise" : "mismatch");
    }
    {
        const double e1 = linf_curvature_error_vs_rosenau(n, 1.0);
        const double e2 = linf_curvature_error_vs_rosenau(2 * n, 1.0);
        s.in_range("metric.curvature_order2_ratio", e1 / e2, 3.4, 4.6);
        s.check("metric.ritore_rosenau", ritore_criterion(rosenau::as_axisym(RosenauState::from_h(1.0), grid)).satisfied, "");
        s.check("metric.ritore_rejects_cos4", !ritore_criterion(fourier_metric(grid, 4, 0.5)).satisfied, "");
    }

    // --- flow ---
    {
        std::vector<double> zero(n + 1, 0.0);
        const AxisymMetric round(grid, zero, 0.0);
        const auto r = flow_rhs(round);
        double dev = 0.0;
        for (double v : r) dev = std::max(dev, std::abs(v));
        s.check("flow.round_stationary", dev == 0.0, "max|rhs| = " + num(dev));

        std::vector<double> cvec(n + 1, 0.2);
        const auto rc = flow_rhs(AxisymMetric(grid, cvec, 0.0));
        double devc = 0.0;
        for (double v : rc) devc = std::max(devc, std::abs(v - (1.0 - std::exp(-0.4))));
        s.below("flow.constant_relaxation", devc, 1e-15);
    }
    {
        // Richardson: one step vs two half steps vs four quarter steps, on a
        // fixed coarse grid so the dt^5 differences stay above rounding
        ColatitudeGrid coarse(32);
        const AxisymMetric m = rosenau::as_axisym(RosenauState::from_h(1.0), coarse);
        const double dt = 0.5 * stability_dt(m, 0.5);
        auto dist = [&](const AxisymMetric& a, const AxisymMetric& b) {
            double d = 0.0;
            for (int i = 0; i <= 32; ++i) d = std::max(d, std::abs(a.u(i) - b.u(i)));
            return d;
        };
        const AxisymMetric full = flow_step(m, dt, false);
        AxisymMetric halves = flow_step(flow_step(m, dt / 2, false), dt / 2, false);
        AxisymMetric quarters = m;
        for (int k = 0; k < 4; ++k) quarters = flow_step(quarters, dt / 4, false);
        const double ratio = dist(full, halves) / dist(halves, quarters);
        s.in_range("flow.rk4_order_ratio", ratio, 16.0 * 0.7, 16.0 * 1.3);
    }
    {
        FlowParams p;
        p.t_end = 0.5;
        p.output_times = {0.0, 0.25, 0.5};
        const Trajectory traj = evolve(fourier_metric(grid, 2, 0.1), p);
        double area_dev = 0.0, min_k = 1e300;
        for (const auto& snap : traj.snapshots) {
            area_dev = std::max(area_dev, std::abs(total_area(snap) - kFourPi));
            min_k = std::min(min_k, gauss_curvature(snap).min());
        }
        s.below("flow.area_renormalized", area_dev, 1e-10);
        s.check("flow.positivity_preserved", min_k > -1e-8, "min K = " + num(min_k));

        const Trajectory again = evolve(fourier_metric(grid, 2, 0.1), p);
        bool same = !traj.blew_up && !again.blew_up;
        for (std::size_t j = 0; j < traj.snapshots.size() && same; ++j) {
            same = traj.snapshots[j].u() == again.snapshots[j].u();
        }
        s.check("flow.deterministic", same, same ? "bitwise" : "mismatch");

        // reflection symmetry survives the time stepping bitwise
        const auto& last = traj.snapshots.back();
        bool sym = true;
        for (int i = 0; i <= n; ++i) sym = sym && (last.u(i) == last.u(n - i));
        s.check("flow.symmetry_preserved", sym, sym ? "bitwise" : "mismatch");
    }
    {
        FlowParams p;
        p.t_end = 0.5;
        p.output_times = {0.1, 0.3, 0.5};
        const Trajectory traj = evolve(fourier_metric(grid, 2, 0.6), p);
        double worst = 0.0;
        for (const auto& snap : traj.snapshots) {
            const double barrier = -1.0 / (std::exp(snap.time()) - 1.0);
            worst = std::max(worst, barrier - gauss_curvature(snap).min());
        }
        s.below("flow.lower_barrier", worst, 1e-6);
    }

    // --- profile ---
    {
        std::vector<double> zero(n + 1, 0.0);
        const AxisymMetric round(grid, zero, 0.0);
        const CapGeometry caps(round);
        double worst_inv = 0.0;
        for (double psi = 2.0 * h; psi < kPi - 2.0 * h; psi += 0.37) {
            const double xi = caps.area(psi) / kFourPi;
            worst_inv = std::max(worst_inv, std::abs(caps.invert_area(xi) - psi));
        }
        s.below("profile.inversion_identity", worst_inv, 1e-10);
        s.below("profile.round_half_area", std::abs(cap_area(round, kPi / 2) - 2.0 * kPi), 1e-9);

        const auto xi = comparison_xi_grid(200);
        const IsoperimetricProfile p = build_profile(round, xi);
        double dev = 0.0;
        for (std::size_t i = 0; i < xi.size(); ++i) {
            dev = std::max(dev, std::abs(p.value[i] - kFourPi * std::sqrt(xi[i] * (1.0 - xi[i]))));
        }
        s.below("profile.round_closed_form", dev, 1e-8);
    }
    {
        const AxisymMetric m = fourier_metric(grid, 2, 0.1);
        const auto xi = comparison_xi_grid(200);
        const IsoperimetricProfile p = build_profile(m, xi);
        s.check("profile.certified_fourier", p.certified, "");
        double sym_dev = 0.0;
        for (std::size_t i = 0; i < xi.size(); ++i) {
            const std::size_t j = xi.size() - 1 - i;
            sym_dev = std::max(sym_dev, std::abs(p.value[i] - p.value[j]));
        }
        s.below("profile.symmetry", sym_dev, 1e-10);

        double concave = 0.0, identity_dev = 0.0;
        const CapGeometry caps(m);
        const EvenCubicInterpolant k_interp(gauss_curvature(m).k_samples, h);
        for (std::size_t i = 0; i < xi.size(); ++i) {
            concave = std::max(concave, p.d2[i]);
            const double psi = caps.invert_area(xi[i]);
            const double kk = k_interp.value(psi);
            const double rhs = -(kFourPi * kFourPi * kk + p.d1[i] * p.d1[i]) / p.value[i];
            identity_dev = std::max(identity_dev, std::abs(p.d2[i] - rhs) / std::abs(rhs));
        }
        s.check("profile.concave_under_positive_K", concave < 0.0, "max d2 = " + num(concave));
        s.below("profile.concavity_identity", identity_dev, 50.0 * h * h);

        double geo_dev = 0.0;
        for (int i = n / 8; i <= 7 * n / 8; ++i) {
            const double psi = grid.psi(i);
            const double k = geodesic_curvature_latitude(m, psi);
            const auto pt = caps.at_fraction(caps.area(psi) / kFourPi);
            geo_dev = std::max(geo_dev, std::abs(k - pt.d1 / kFourPi));
        }
        s.below("profile.geodesic_curvature_identity", geo_dev, 1e-6);
    }
    {
        const double r1 = cap_variation_worst(n);
        const double r2 = cap_variation_worst(2 * n);
        s.in_range("profile.cap_variation_order2_ratio", r1 / r2, 3.0, 5.2);
    }
    {
        std::vector<double> xi;
        for (int k = 0; k < 20; ++k) xi.push_back(1e-4 * std::pow(100.0, k / 19.0));
        IsoperimetricProfile p;
        p.xi = xi;
        for (double x : xi) p.value.push_back(kFourPi * std::sqrt(x * (1.0 - x)));
        p.d1.resize(xi.size());
        p.d2.resize(xi.size());
        p.source = ProfileSource::RosenauClosedForm;
        const SupCurvatureFit fit = asymptotic_sup_curvature(p);
        s.check("profile.sup_curvature_round",
                fit.well_conditioned && std::abs(fit.value - 1.0) <= 0.01, num(fit.value));
    }

    // --- rosenau ---
    {
        double worst = 0.0;
        for (double t : {0.0, 0.7, 2.0}) {
            for (double xi = 0.02; xi < 1.0; xi += 0.07) {
                worst = std::max(worst, std::abs(rosenau::profile_residual(xi, t)));
            }
        }
        s.below("rosenau.profile_equation_residual", worst, 1e-11);

        const RosenauState st = RosenauState::from_h(1.0);
        double sup_scan = 0.0;
        for (double x = 0.0; x < 30.0; x += 0.25) {
            sup_scan = std::max(sup_scan, rosenau::curvature_cylinder(st, x));
        }
        const double bound = rosenau::curvature_bound(st.t, 0.0);
        s.check("rosenau.bound_sharp",
                sup_scan <= bound + 1e-12 && bound - sup_scan <= 1e-6,
                "sup K scan " + num(sup_scan) + " vs bound " + num(bound));

        bool monotone = true;
        for (double xi : {0.1, 0.5}) {
            double prev = rosenau::profile(xi, -3.0);
            for (double t = -2.5; t <= 6.0; t += 0.5) {
                const double v = rosenau::profile(xi, t);
                monotone = monotone && v > prev;
                prev = v;
            }
        }
        s.check("rosenau.profile_increasing_in_t", monotone, "");

        const AxisymMetric m = rosenau::as_axisym(st, grid);
        s.below("rosenau.axisym_area", std::abs(total_area(m) - kFourPi), 1e-8);
        const auto xi = comparison_xi_grid(100);
        const IsoperimetricProfile p = build_profile(m, xi);
        double gap = 0.0;
        for (std::size_t i = 0; i < xi.size(); ++i) {
            gap = std::max(gap, std::abs(p.value[i] - rosenau::profile(xi[i], st.t)));
        }
        s.below("rosenau.axisym_profile_gap", gap, 1.0 * h * h);
    }

    // --- comparison ---
    {
        const double t_ref = 0.7;
        double worst = 0.0;
        for (double xi : {0.05, 0.3, 0.5, 0.9}) {
            const double v = rosenau::profile(xi, t_ref);
            worst = std::max(worst, std::abs(crossing_time(v, xi) - t_ref));
        }
        s.below("comparison.crossing_inversion", worst, 1e-9);

        // closed-form profile table at s = 0.4 -> t0 = 0.4
        const auto xi = comparison_xi_grid(200);
        IsoperimetricProfile p;
        p.xi = xi;
        for (double x : xi) p.value.push_back(rosenau::profile(x, 0.4));
        p.d1.resize(xi.size());
        p.d2.resize(xi.size());
        p.source = ProfileSource::RosenauClosedForm;
        p.sup_curvature = rosenau::curvature_bound(0.4, 0.0);
        s.below("comparison.solve_t0_closed_form", std::abs(solve_t0(p) - 0.4), 1e-6);
    }
    {
        FlowParams p;
        p.t_end = 0.4;
        p.output_times = {0.0, 0.2, 0.4};
        const AxisymMetric m0 = normalize(rosenau::as_axisym(RosenauState::from_h(1.0), grid));
        const Trajectory traj = evolve(m0, p);
        const double t0 = solve_t0(build_profile(traj.snapshots.front(), comparison_xi_grid(200)));
        const ComparisonReport rep = monitor(traj, t0, 200);
        const double tol = monitor_tolerance(n);
        double worst_margin = 0.0, worst_bound = 0.0, worst_l1 = 0.0;
        for (const auto& r : rep.records) {
            worst_margin = std::max(worst_margin, -r.min_profile_margin);
            worst_bound = std::max(worst_bound, -r.bound_margin);
            worst_l1 = std::max(worst_l1, r.l1_deviation - r.l1_bound * (1.0 + 1e-3));
        }
        s.below("comparison.rosenau_margins", worst_margin, tol);
        s.below("comparison.rosenau_bound_margin", worst_bound, 1e-3 * 1.4 + tol);
        s.below("comparison.rosenau_l1_decay", worst_l1, tol);
        s.below("comparison.t0_near_zero", std::abs(t0), 1e-3);

        const ComparisonReport rep2 = monitor(traj, t0, 200);
        bool same = rep.records.size() == rep2.records.size();
        for (std::size_t j = 0; j < rep.records.size() && same; ++j) {
            same = rep.records[j].min_profile_margin == rep2.records[j].min_profile_margin &&
                   rep.records[j].l1_deviation == rep2.records[j].l1_deviation &&
                   rep.records[j].profile_values == rep2.records[j].profile_values;
        }
        s.check("comparison.report_deterministic", same, same ? "bitwise" : "mismatch");
    }

    return s.results;
}

}  // namespace ricci
