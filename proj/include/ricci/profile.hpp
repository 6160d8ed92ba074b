#pragma once

#include <span>
#include <vector>

#include "ricci/interp.hpp"
#include "ricci/metric.hpp"

namespace ricci {

enum class ProfileSource { FromMetric, RosenauClosedForm };

/// Tabulated cap profile phi(xi) = L o A^{-1}(4 pi xi) with chain-rule
/// derivatives in the area fraction xi.  When `certified` the table is the
/// isoperimetric profile of the metric; otherwise it is an upper bound only.
struct IsoperimetricProfile {
    std::vector<double> xi;
    std::vector<double> value;
    std::vector<double> d1;
    std::vector<double> d2;
    ProfileSource source = ProfileSource::FromMetric;
    bool certified = false;
    double sup_curvature = 0.0;  // max nodal K of the source metric
    double time = 0.0;
};

/// Cap geometry of one metric: cumulative area, boundary length and their
/// psi-derivatives, built once and then cheap to query.  Area uses the
/// Simpson prefix over even nodes plus a partial-interval Simpson tail, and
/// is symmetrized against the complementary cap, so A(psi) is continuous,
/// strictly increasing and satisfies A(psi) + A(pi - psi) = A(pi) exactly.
class CapGeometry {
public:
    explicit CapGeometry(const AxisymMetric& m);

    double area(double psi) const;            // A(psi), area of the polar cap
    double length(double psi) const;          // L(psi) = 2 pi e^u sin psi
    double invert_area(double xi) const;      // psi with A(psi) = 4 pi xi
    double area_rate(double psi) const;       // A'
    double length_rate(double psi) const;     // L'

    struct ProfilePoint {
        double psi, value, d1, d2;
    };
    ProfilePoint at_fraction(double xi) const;

    const EvenCubicInterpolant& u() const { return u_; }

private:
    double area_from_north(double psi) const;

    EvenCubicInterpolant u_;
    std::vector<double> prefix_;  // Simpson prefix at even nodes
    double h_;
    int n_;
};

double cap_area(const AxisymMetric& m, double psi);
double cap_length(const AxisymMetric& m, double psi);
double invert_area(const AxisymMetric& m, double xi);

IsoperimetricProfile build_profile(const AxisymMetric& m, std::span<const double> xi_samples,
                                   Exec exec = Exec::Parallel);

/// Geodesic curvature of the latitude circle at psi: e^{-u}(cot psi + u').
double geodesic_curvature_latitude(const AxisymMetric& m, double psi);

/// Residuals of the first-variation identities dA/ds = L and dL/ds = k L
/// under unit-speed normal motion of the cap boundary (ds = e^u dpsi),
/// evaluated by grid-step central differences; both vanish at O(dpsi^2).
struct CapVariationResidual {
    double area_rate;    // dA/ds - L
    double length_rate;  // dL/ds - k L
};
CapVariationResidual cap_variation_check(const AxisymMetric& m, double psi);

/// Least-squares estimate of sup K from the small-xi expansion
/// phi = 4 pi sqrt(xi) - 2 pi supK xi^{3/2} + O(xi^2): fits
/// (4 pi sqrt(xi) - phi)/(2 pi xi^{3/2}) = a + b sqrt(xi) over the window.
struct SupCurvatureFit {
    double value = 0.0;
    int samples_used = 0;
    bool well_conditioned = false;
};
SupCurvatureFit asymptotic_sup_curvature(const IsoperimetricProfile& p,
                                         double window_lo = 1e-4, double window_hi = 1e-2);

/// Residual of the profile evolution equation
/// phi_t = (phi^2 phi'' - phi (phi')^2)/(4 pi)^2 + phi + phi'(1 - 2 xi)
/// given the pieces; pure algebra shared by closed-form and tabulated checks.
double profile_equation_residual(double value, double d1, double d2, double dt_value, double xi);

}  // namespace ricci
