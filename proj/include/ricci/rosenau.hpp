#pragma once

#include "ricci/metric.hpp"

namespace ricci {

/// The Rosenau solution: explicit axially symmetric normalized Ricci flow on
/// the two-sphere, parametrized by h = e^{-2t} > 0.  On the cylinder
/// (x, y) in R x [0, 4 pi] the metric is u(x) (dx^2 + dy^2) with
/// u(x) = sinh(h) / (2 h (cosh x + cosh h)).
struct RosenauState {
    double h;  // e^{-2t}
    double t;

    static RosenauState from_time(double t);
    static RosenauState from_h(double h);
};

namespace rosenau {

/// Cylinder conformal factor u(x).
double conformal_factor(const RosenauState& s, double x);

/// Gauss curvature on the cylinder: h (1 + cosh x cosh h) / (sinh h (cosh x + cosh h)).
/// Increases monotonically from h/sinh h at the equator to h coth h at the poles.
double curvature_cylinder(const RosenauState& s, double x);

/// Same curvature in colatitude, via cosh x = (1 + cos^2 psi)/sin^2 psi.
double curvature_colatitude(const RosenauState& s, double psi);

/// Coordinate change between the cylinder and colatitude; equator at x = 0.
double psi_from_cylinder(double x);
double cylinder_from_psi(double psi);

/// Cap profile of the Rosenau metric:
/// phi(xi, t) = 4 pi sqrt( sinh(xi h) sinh((1-xi) h) / (sinh(h) h) ).
/// Evaluated in log space (robust for the large h the crossing-time solver
/// probes) with a fourth-order Taylor branch below h = 1e-4.
double profile(double xi, double t);
double log_profile(double xi, double t);

/// Analytic xi- and t-derivatives of the profile.
struct ProfileJet {
    double value;
    double d1;   // d phi / d xi
    double d2;   // d^2 phi / d xi^2
    double dt;   // d phi / d t
};
ProfileJet profile_jet(double xi, double t);

/// Residual of the profile evolution equation on the closed form; zero up to
/// rounding at every (xi, t).
double profile_residual(double xi, double t);

/// Time-dependent curvature bound x coth(x) at x = e^{-2(t + t0)}; equals 1
/// when t + t0 = +infinity.
double curvature_bound(double t, double t0);

/// The Rosenau metric as an AxisymMetric snapshot at time s.t:
/// e^{2u(psi)} = (sinh h / h) * 2 / (1 + cos^2 psi + sin^2 psi cosh h).
AxisymMetric as_axisym(const RosenauState& s, const ColatitudeGrid& grid);

}  // namespace rosenau
}  // namespace ricci
