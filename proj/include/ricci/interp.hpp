#pragma once

#include <span>
#include <vector>

namespace ricci {

/// Local cubic (4-point Lagrange) interpolation of nodal samples on the
/// uniform colatitude grid, with even reflection across both poles
/// (y_{-1} = y_1, y_{n+1} = y_{n-1}).  Reflection matches the pole
/// regularity class, so values, first and second derivatives stay accurate
/// up to the boundary.
class EvenCubicInterpolant {
public:
    EvenCubicInterpolant(std::span<const double> samples, double spacing);

    double value(double s) const;
    double deriv(double s) const;

    struct Jet {
        double value;
        double d1;
        double d2;
    };
    Jet jet(double s) const;

private:
    struct Coeffs {
        double c0, c1, c2, c3;  // local polynomial in x = (s - psi_j)/h
        double x;
    };
    Coeffs coeffs(double s) const;

    std::vector<double> y_;
    double h_;
    int n_;
};

}  // namespace ricci
