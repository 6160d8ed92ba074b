#include "oracles.hpp"

#include <cmath>

namespace oracles {

namespace {

double simpson_panel(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(const std::function<double(double)>& f, double a, double fa, double b, double fb,
                double m, double fm, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson_panel(a, fa, m, fm, flm);
    const double right = simpson_panel(m, fm, b, fb, frm);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol) {
        return left + right + (left + right - whole) / 15.0;
    }
    return adaptive(f, a, fa, m, fm, lm, flm, left, tol / 2.0, depth - 1) +
           adaptive(f, m, fm, b, fb, rm, frm, right, tol / 2.0, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    return adaptive(f, a, fa, b, fb, m, fm, simpson_panel(a, fa, b, fb, fm), tol, 48);
}

double derivative(const std::function<double(double)>& f, double x, double h0) {
    // three central differences at h, h/2, h/4; two Richardson eliminations
    auto d = [&](double h) { return (f(x + h) - f(x - h)) / (2.0 * h); };
    const double d1 = d(h0), d2 = d(h0 / 2.0), d3 = d(h0 / 4.0);
    const double r1 = (4.0 * d2 - d1) / 3.0;
    const double r2 = (4.0 * d3 - d2) / 3.0;
    return (16.0 * r2 - r1) / 15.0;
}

double second_derivative(const std::function<double(double)>& f, double x, double h0) {
    auto d = [&](double h) { return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h); };
    const double d1 = d(h0), d2 = d(h0 / 2.0), d3 = d(h0 / 4.0);
    const double r1 = (4.0 * d2 - d1) / 3.0;
    const double r2 = (4.0 * d3 - d2) / 3.0;
    return (16.0 * r2 - r1) / 15.0;
}

}  // namespace oracles
