#include "ricci/comparison.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "ricci/quadrature.hpp"
#include "ricci/rosenau.hpp"

namespace ricci {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFourPi = 4.0 * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// crossing-time bisection bracket; outside it the profile gap is below
// double resolution anyway
constexpr double kTLo = -40.0;
constexpr double kTHi = 40.0;
constexpr int kBisectIterations = 100;

double model_profile(double xi, double t_shifted, bool t0_infinite) {
    if (t0_infinite || t_shifted > 200.0) return kFourPi * std::sqrt(xi * (1.0 - xi));
    return rosenau::profile(xi, t_shifted);
}

}  // namespace

double crossing_time(double profile_value, double xi) {
    if (!(profile_value > 0.0)) throw std::invalid_argument("crossing_time: value must be positive");
    if (!(xi > 0.0) || !(xi < 1.0)) throw std::invalid_argument("crossing_time: xi in (0, 1)");
    const double limit = kFourPi * std::sqrt(xi * (1.0 - xi));
    if (profile_value >= limit) return kInf;
    const double target = std::log(profile_value);
    if (target < rosenau::log_profile(xi, kTLo)) return -kInf;  // unreachable for sane profiles
    double lo = kTLo, hi = kTHi;
    for (int it = 0; it < kBisectIterations; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (rosenau::log_profile(xi, mid) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double solve_t0(const IsoperimetricProfile& p) {
    const int count = static_cast<int>(p.xi.size());
    std::vector<double> crossings(count);
#pragma omp parallel for schedule(static) if (count >= 32)
    for (int i = 0; i < count; ++i) crossings[i] = crossing_time(p.value[i], p.xi[i]);

    double t0 = kInf;
    for (double t : crossings) t0 = std::min(t0, t);

    // endpoint candidate: e^{-2 t*} coth(e^{-2 t*}) = sup K (only binds when sup K > 1)
    if (p.sup_curvature > 1.0) {
        double lo = 0.0, hi = p.sup_curvature + 1.0;
        for (int it = 0; it < kBisectIterations; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double v = (mid < 1e-8) ? 1.0 + mid * mid / 3.0 : mid / std::tanh(mid);
            if (v < p.sup_curvature) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        const double t_star = -0.5 * std::log(0.5 * (lo + hi));
        t0 = std::min(t0, t_star);
    }
    return t0;
}

std::vector<double> comparison_xi_grid(int samples) {
    if (samples < 16) throw std::invalid_argument("comparison_xi_grid: need at least 16 samples");
    const int n_log = samples / 4;
    const int n_mid = samples - 2 * n_log;
    std::vector<double> xi;
    xi.reserve(samples);
    // 1e-3 .. 0.1 log-spaced
    for (int k = 0; k < n_log; ++k) {
        xi.push_back(1e-3 * std::pow(100.0, static_cast<double>(k) / (n_log - 1)));
    }
    // open middle (0.1, 0.9)
    for (int j = 1; j <= n_mid; ++j) {
        xi.push_back(0.1 + 0.8 * static_cast<double>(j) / (n_mid + 1));
    }
    // mirror of the log block: 0.9 .. 0.999
    for (int k = n_log - 1; k >= 0; --k) {
        xi.push_back(1.0 - 1e-3 * std::pow(100.0, static_cast<double>(k) / (n_log - 1)));
    }
    return xi;
}

double l1_deviation(const AxisymMetric& m) {
    const auto& g = m.grid();
    const CurvatureField k = gauss_curvature(m);
    std::vector<double> f(g.n() + 1);
    for (int i = 0; i <= g.n(); ++i) {
        f[i] = std::abs(k.k_samples[i] - 1.0) * std::exp(2.0 * m.u(i)) * g.sin_node(i);
    }
    return 2.0 * kPi * simpson(f, g.spacing());
}

namespace {

MonitorRecord monitor_snapshot(const AxisymMetric& m, double t0, std::span<const double> xi) {
    MonitorRecord rec;
    rec.time = m.time();
    const bool t0_inf = std::isinf(t0) && t0 > 0;

    const IsoperimetricProfile p = build_profile(m, xi, Exec::Serial);
    rec.certified = p.certified;
    rec.profile_values = p.value;
    rec.model_values.resize(xi.size());
    rec.min_profile_margin = kInf;
    for (std::size_t i = 0; i < xi.size(); ++i) {
        rec.model_values[i] = model_profile(xi[i], rec.time + t0, t0_inf);
        const double margin = p.value[i] - rec.model_values[i];
        if (margin < rec.min_profile_margin) {
            rec.min_profile_margin = margin;
            rec.margin_argmin_xi = xi[i];
        }
    }

    const CurvatureField k = gauss_curvature(m, Exec::Serial);
    rec.max_curvature = k.max();
    rec.min_curvature = k.min();
    rec.curvature_bound = rosenau::curvature_bound(rec.time, t0);
    rec.bound_margin = rec.curvature_bound - rec.max_curvature;
    rec.l1_deviation = l1_deviation(m);
    rec.l1_bound = t0_inf ? 0.0 : kFourPi * std::exp(-4.0 * (rec.time + t0));
    rec.area = total_area(m);
    rec.total_curvature = total_curvature(m);

    const int n = m.grid().n();
    const double h = m.grid().spacing();
    double sup_dk = 0.0;
    for (int i = 1; i < n; ++i) {
        sup_dk = std::max(sup_dk, std::abs(k.k_samples[i + 1] - k.k_samples[i - 1]) / (2.0 * h));
    }
    rec.sup_dpsi_curvature = sup_dk;
    return rec;
}

}  // namespace

ComparisonReport monitor(const Trajectory& traj, double t0, int xi_samples, Exec exec) {
    ComparisonReport report;
    report.t0 = t0;
    report.xi = comparison_xi_grid(xi_samples);
    const int count = static_cast<int>(traj.snapshots.size());
    report.records.resize(count);

    if (exec == Exec::Serial) {
        for (int i = 0; i < count; ++i) {
            report.records[i] = monitor_snapshot(traj.snapshots[i], t0, report.xi);
        }
    } else {
#pragma omp parallel for schedule(dynamic) if (count >= 4)
        for (int i = 0; i < count; ++i) {
            report.records[i] = monitor_snapshot(traj.snapshots[i], t0, report.xi);
        }
    }
    return report;
}

}  // namespace ricci
