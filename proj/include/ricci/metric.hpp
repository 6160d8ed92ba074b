#pragma once

#include <span>
#include <vector>

#include "ricci/grid.hpp"
#include "ricci/kernels.hpp"

namespace ricci {

/// Rotationally symmetric conformal metric e^{2u(psi)} * (round sphere),
/// sampled at the grid nodes.  Immutable snapshot; all operations return new
/// values, so metrics are safe to share across threads.
class AxisymMetric {
public:
    AxisymMetric(ColatitudeGrid grid, std::vector<double> u, double time = 0.0);

    const ColatitudeGrid& grid() const { return grid_; }
    const std::vector<double>& u() const { return u_; }
    double u(int i) const { return u_[i]; }
    double time() const { return time_; }

    AxisymMetric with_u(std::vector<double> u, double time) const {
        return AxisymMetric(grid_, std::move(u), time);
    }

private:
    ColatitudeGrid grid_;
    std::vector<double> u_;
    double time_;
};

/// Gauss curvature samples over the same grid.
struct CurvatureField {
    ColatitudeGrid grid;
    std::vector<double> k_samples;

    double max() const;
    double min() const;
};

CurvatureField gauss_curvature(const AxisymMetric& m, Exec exec = Exec::Parallel);

/// Total area 2*pi * int e^{2u} sin(psi) dpsi by composite Simpson.
double total_area(const AxisymMetric& m);

/// Shift u so that total_area == 4*pi (to rounding in the same quadrature).
AxisymMetric normalize(const AxisymMetric& m);

/// Discrete total curvature int K dmu using the cell-measure weights matched
/// to the flux-form operator; equals 4*pi to rounding for every metric
/// (discrete Gauss-Bonnet).
double total_curvature(const AxisymMetric& m);

/// Magnitude of the one-sided first derivative of u at the two poles; should
/// vanish at O(dpsi) for pole-regular data.
double pole_regularity_defect(const AxisymMetric& m);

/// Latitude-circle certification: K positive everywhere and non-increasing in
/// psi on (0, pi/2).  When it holds, the cap profile is the isoperimetric
/// profile; otherwise only an upper bound.
struct RitoreCheck {
    bool satisfied = false;
    int first_violation = -1;  // node index, -1 when satisfied
};

RitoreCheck ritore_criterion(const AxisymMetric& m);

}  // namespace ricci
