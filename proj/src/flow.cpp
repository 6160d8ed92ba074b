#include "ricci/flow.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ricci/quadrature.hpp"

namespace ricci {

void FlowParams::validate(double t_start) const {
    if (!(safety > 0.0) || safety > 1.0) {
        throw std::invalid_argument("FlowParams: safety must be in (0, 1]");
    }
    if (!(t_end >= t_start)) throw std::invalid_argument("FlowParams: t_end before start time");
    for (std::size_t j = 0; j < output_times.size(); ++j) {
        const double t = output_times[j];
        if (t < t_start) throw std::invalid_argument("FlowParams: output time before start");
        if (t > t_end) throw std::invalid_argument("FlowParams: output time beyond t_end");
        if (j > 0 && !(t > output_times[j - 1])) {
            throw std::invalid_argument("FlowParams: output_times must be strictly increasing");
        }
    }
}

std::vector<double> flow_rhs(const AxisymMetric& m) {
    std::vector<double> out(m.u().size());
    kernels::flow_rhs(m.grid(), m.u(), out);
    return out;
}

double stability_dt(const AxisymMetric& m, double safety) {
    const double h = m.grid().spacing();
    const double umin = *std::min_element(m.u().begin(), m.u().end());
    return safety * h * h * std::exp(2.0 * umin) / 4.0;
}

namespace {

// Time stepper with preallocated stage buffers; `state` always holds u.
struct Stepper {
    const ColatitudeGrid& grid;
    std::vector<double> state;
    std::vector<double> k1, k2, k3, k4, tmp;

    Stepper(const ColatitudeGrid& g, std::vector<double> u0)
        : grid(g), state(std::move(u0)) {
        const std::size_t s = state.size();
        k1.resize(s); k2.resize(s); k3.resize(s); k4.resize(s); tmp.resize(s);
    }

    // advances state by dt; returns max K seen at the first stage
    double rk4(double dt) {
        const std::size_t s = state.size();
        kernels::flow_rhs(grid, state, k1);
        double min_rhs = k1[0];
        for (std::size_t i = 0; i < s; ++i) min_rhs = std::min(min_rhs, k1[i]);
        for (std::size_t i = 0; i < s; ++i) tmp[i] = state[i] + 0.5 * dt * k1[i];
        kernels::flow_rhs(grid, tmp, k2);
        for (std::size_t i = 0; i < s; ++i) tmp[i] = state[i] + 0.5 * dt * k2[i];
        kernels::flow_rhs(grid, tmp, k3);
        for (std::size_t i = 0; i < s; ++i) tmp[i] = state[i] + dt * k3[i];
        kernels::flow_rhs(grid, tmp, k4);
        for (std::size_t i = 0; i < s; ++i) {
            state[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        return 1.0 - min_rhs;  // rhs = 1 - K node by node
    }

    void renormalize() {
        std::vector<double>& f = tmp;
        for (std::size_t i = 0; i < state.size(); ++i) {
            f[i] = std::exp(2.0 * state[i]) * grid.sin_node(static_cast<int>(i));
        }
        const double area = 2.0 * std::numbers::pi * simpson(f, grid.spacing());
        const double shift = -0.5 * std::log(area / (4.0 * std::numbers::pi));
        for (double& v : state) v += shift;
    }

    double min_exp2u() const {
        const double umin = *std::min_element(state.begin(), state.end());
        return std::exp(2.0 * umin);
    }

    bool finite() const {
        for (double v : state) {
            if (!std::isfinite(v)) return false;
        }
        return true;
    }
};

}  // namespace

AxisymMetric flow_step(const AxisymMetric& m, double dt, bool renormalize) {
    if (!(dt > 0.0)) throw std::invalid_argument("flow_step: dt must be positive");
    Stepper s(m.grid(), m.u());
    s.rk4(dt);
    if (renormalize) s.renormalize();
    return m.with_u(std::move(s.state), m.time() + dt);
}

Trajectory evolve(const AxisymMetric& m0, const FlowParams& p) {
    const double t_start = m0.time();
    p.validate(t_start);

    Trajectory traj;
    Stepper s(m0.grid(), m0.u());
    double t = t_start;
    std::size_t next_out = 0;

    auto emit_due = [&](double now) {
        while (next_out < p.output_times.size() && p.output_times[next_out] <= now) {
            traj.snapshots.emplace_back(m0.grid(), s.state, p.output_times[next_out]);
            ++next_out;
        }
    };
    emit_due(t);

    const double h = m0.grid().spacing();
    std::vector<double> last_good = s.state;
    while (t < p.t_end) {
        double dt = p.safety * h * h * s.min_exp2u() / 4.0;
        // clip onto the next output time (or t_end) so snapshots land exactly
        double target = p.t_end;
        if (next_out < p.output_times.size()) target = std::min(target, p.output_times[next_out]);
        double t_next;
        if (t + dt >= target) {
            dt = target - t;
            t_next = target;
        } else {
            t_next = t + dt;
        }
        if (!(dt > 0.0)) {  // target == t after clipping; nothing to integrate
            emit_due(t);
            continue;
        }

        last_good = s.state;
        const double max_k = s.rk4(dt);
        if (p.renormalize_each_step && s.finite()) s.renormalize();

        if (!s.finite() || max_k > p.blowup_max_curvature) {
            traj.blew_up = true;
            traj.blowup_time = t_next;
            traj.snapshots.emplace_back(m0.grid(), std::move(last_good), t);
            break;
        }
        t = t_next;
        traj.stats.dt.push_back(dt);
        traj.stats.max_curvature.push_back(max_k);
        emit_due(t);
    }
    return traj;
}

}  // namespace ricci
