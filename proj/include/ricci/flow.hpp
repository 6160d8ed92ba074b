#pragma once

#include <vector>

#include "ricci/metric.hpp"

namespace ricci {

struct FlowParams {
    double safety = 0.5;   // CFL safety factor in (0, 1]
    double t_end = 0.0;
    bool renormalize_each_step = true;
    std::vector<double> output_times;  // sorted, within [time of m0, t_end]
    double blowup_max_curvature = 1e6;

    void validate(double t_start) const;  // throws std::invalid_argument
};

struct StepStats {
    std::vector<double> dt;
    std::vector<double> max_curvature;
};

struct Trajectory {
    std::vector<AxisymMetric> snapshots;
    StepStats stats;
    bool blew_up = false;
    double blowup_time = 0.0;
};

/// du/dt samples for the normalized Ricci flow in conformal-factor form.
std::vector<double> flow_rhs(const AxisymMetric& m);

/// One classical RK4 step of size dt, optionally followed by the area
/// renormalization projection.
AxisymMetric flow_step(const AxisymMetric& m, double dt, bool renormalize = true);

/// Diffusion-limited explicit step: safety * dpsi^2 * min(e^{2u}) / 4.
double stability_dt(const AxisymMetric& m, double safety);

/// Integrate to p.t_end, emitting snapshots exactly at p.output_times (the
/// step is clipped onto each output time, never interpolated).  On blowup the
/// trajectory ends with the last finite state and blew_up is set.
Trajectory evolve(const AxisymMetric& m0, const FlowParams& p);

}  // namespace ricci
