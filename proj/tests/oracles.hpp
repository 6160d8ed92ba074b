#pragma once

#include <functional>

// Independent numerical oracles used only by tests: they share no code with
// the library paths they check.

namespace oracles {

/// Adaptive Simpson quadrature with error control; tol is absolute.
double integrate(const std::function<double(double)>& f, double a, double b, double tol = 1e-12);

/// Richardson-extrapolated central difference, order 6.
double derivative(const std::function<double(double)>& f, double x, double h0 = 1e-2);

/// Second derivative by the same extrapolation.
double second_derivative(const std::function<double(double)>& f, double x, double h0 = 1e-2);

}  // namespace oracles
