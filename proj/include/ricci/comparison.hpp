#pragma once

#include <vector>

#include "ricci/flow.hpp"
#include "ricci/profile.hpp"

namespace ricci {

/// Per-snapshot monitor output.  Margins are against the Rosenau model
/// profile shifted by t0 (or its round limit when t0 = +inf).  When the
/// snapshot's profile is not certified by the Ritore criterion, a negative
/// profile margin is inconclusive rather than a violation; `certified`
/// records which reading applies.
struct MonitorRecord {
    double time = 0.0;
    bool certified = false;
    double min_profile_margin = 0.0;
    double margin_argmin_xi = 0.0;
    double max_curvature = 0.0;
    double min_curvature = 0.0;
    double curvature_bound = 0.0;
    double bound_margin = 0.0;  // bound - max K
    double l1_deviation = 0.0;
    double l1_bound = 0.0;      // 4 pi e^{-4(t+t0)}
    double sup_dpsi_curvature = 0.0;  // diagnostic only, no asserted rate
    double area = 0.0;
    double total_curvature = 0.0;  // cell-measure int K dmu (Gauss-Bonnet check)
    std::vector<double> profile_values;  // phi_u on the comparison grid
    std::vector<double> model_values;    // model profile on the same grid
};

struct ComparisonReport {
    double t0 = 0.0;  // +inf when the initial profile dominates the round one
    std::vector<double> xi;
    std::vector<MonitorRecord> records;
};

/// Unique t with rosenau profile(xi, t) = profile_value; +inf when the value
/// already reaches the round-sphere limit 4 pi sqrt(xi(1-xi)).
double crossing_time(double profile_value, double xi);

/// Infimum of crossing times over the tabulated profile, together with the
/// endpoint candidate solving x coth x = sup K.
double solve_t0(const IsoperimetricProfile& p);

/// The fixed comparison grid: log-spaced near both endpoints (down to 1e-3),
/// linear in the middle.  `samples` is split 1/4 : 1/2 : 1/4.
std::vector<double> comparison_xi_grid(int samples = 200);

/// int |K - 1| dmu by Simpson.
double l1_deviation(const AxisymMetric& m);

/// Run all monitors along a trajectory.
ComparisonReport monitor(const Trajectory& traj, double t0, int xi_samples = 200,
                         Exec exec = Exec::Parallel);

}  // namespace ricci
