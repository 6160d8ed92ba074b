#include "ricci/rosenau.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace ricci {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFourPi = 4.0 * std::numbers::pi;
constexpr double kTaylorH = 1e-4;    // below this the sinh ratio goes through the series
constexpr double kLogSinhH = 350.0;  // above this ln sinh(z) = z - ln 2 + log1p(-e^{-2z})

double log_sinh(double z) {
    if (z > kLogSinhH) return z - std::numbers::ln2 + std::log1p(-std::exp(-2.0 * z));
    return std::log(std::sinh(z));
}

// ln sinh(z) - z, stable for every z > 0 (no large-term cancellation)
double log_sinh_minus_z(double z) {
    return std::log(-std::expm1(-2.0 * z)) - std::numbers::ln2;
}

double x_coth_x(double x) {
    if (x < 1e-8) return 1.0 + x * x / 3.0;
    return x / std::tanh(x);
}

}  // namespace

RosenauState RosenauState::from_time(double t) { return {std::exp(-2.0 * t), t}; }

RosenauState RosenauState::from_h(double h) {
    if (!(h > 0.0)) throw std::invalid_argument("RosenauState: h must be positive");
    return {h, -0.5 * std::log(h)};
}

namespace rosenau {

double conformal_factor(const RosenauState& s, double x) {
    return std::sinh(s.h) / (2.0 * s.h * (std::cosh(x) + std::cosh(s.h)));
}

double curvature_cylinder(const RosenauState& s, double x) {
    // divide through by cosh x so the poles (|x| -> inf) stay finite
    const double sech = 1.0 / std::cosh(x);
    const double ch = std::cosh(s.h);
    return s.h * (sech + ch) / (std::sinh(s.h) * (1.0 + ch * sech));
}

double curvature_colatitude(const RosenauState& s, double psi) {
    const double sn2 = std::sin(psi) * std::sin(psi);
    const double w = 1.0 + std::cos(psi) * std::cos(psi);
    const double ch = std::cosh(s.h);
    return s.h * (sn2 + w * ch) / (std::sinh(s.h) * (w + sn2 * ch));
}

double psi_from_cylinder(double x) { return 2.0 * std::atan(std::exp(0.5 * x)); }

double cylinder_from_psi(double psi) { return 2.0 * std::log(std::tan(0.5 * psi)); }

double log_profile(double xi, double t) {
    if (!(xi > 0.0) || !(xi < 1.0)) throw std::invalid_argument("rosenau profile: xi in (0,1)");
    const double h = std::exp(-2.0 * t);
    const double q = xi * (1.0 - xi);
    if (h < kTaylorH) {
        const double g = -h * h * q / 3.0 + h * h * h * h * q * (2.0 - q) / 90.0;
        return std::log(kFourPi) + 0.5 * (std::log(q) + g);
    }
    // ln sinh(a) + ln sinh(b) - ln sinh(h) with a + b = h: the linear parts
    // cancel identically, so only the bounded ln(sinh(z) e^{-z}) pieces enter
    return std::log(kFourPi) +
           0.5 * (log_sinh_minus_z(xi * h) + log_sinh_minus_z((1.0 - xi) * h) -
                  log_sinh_minus_z(h) - std::log(h));
}

double profile(double xi, double t) { return std::exp(log_profile(xi, t)); }

ProfileJet profile_jet(double xi, double t) {
    if (!(xi > 0.0) || !(xi < 1.0)) throw std::invalid_argument("rosenau profile: xi in (0,1)");
    const double h = std::exp(-2.0 * t);
    ProfileJet out;
    if (h < kTaylorH) {
        // from R = q exp(g), phi = 4 pi sqrt(R), q = xi(1-xi)
        const double q = xi * (1.0 - xi);
        const double h2 = h * h, h4 = h2 * h2;
        const double g = -h2 * q / 3.0 + h4 * q * (2.0 - q) / 90.0;
        const double gq = -h2 / 3.0 + h4 * (2.0 - 2.0 * q) / 90.0;   // dg/dq
        const double gqq = -2.0 * h4 / 90.0;                         // d2g/dq2
        const double eg = std::exp(g);
        const double R = q * eg;
        const double Rq = eg * (1.0 + q * gq);
        const double Rqq = eg * (gq * (1.0 + q * gq) + gq + q * gqq);
        const double qp = 1.0 - 2.0 * xi;
        const double Rx = Rq * qp;
        const double Rxx = Rqq * qp * qp - 2.0 * Rq;
        const double sqrtR = std::sqrt(R);
        out.value = kFourPi * sqrtR;
        out.d1 = kFourPi * Rx / (2.0 * sqrtR);
        out.d2 = kFourPi * (Rxx / (2.0 * sqrtR) - Rx * Rx / (4.0 * R * sqrtR));
        const double Rh = q * eg * (-2.0 * h * q / 3.0 + 4.0 * h * h2 * q * (2.0 - q) / 90.0);
        out.dt = kFourPi * (-2.0 * h) * Rh / (2.0 * sqrtR);
        return out;
    }
    const double P = std::sinh(xi * h) * std::sinh((1.0 - xi) * h);
    const double D = std::sinh(h) * h;
    const double sd = std::sinh((1.0 - 2.0 * xi) * h);
    const double cd = std::cosh((1.0 - 2.0 * xi) * h);
    const double root = std::sqrt(P * D);
    out.value = kFourPi * std::sqrt(P / D);
    out.d1 = 2.0 * kPi * h * sd / root;
    out.d2 = -2.0 * kPi * h * h / root * (2.0 * cd + sd * sd / (2.0 * P));
    // d phi/dt = -h phi [ xi coth(xi h) + (1-xi) coth((1-xi) h) - coth(h) - 1/h ];
    // written through x coth x so the 1/h poles cancel before the division
    const double br = (x_coth_x(xi * h) + x_coth_x((1.0 - xi) * h) - x_coth_x(h) - 1.0) / h;
    out.dt = -h * out.value * br;
    return out;
}

double profile_residual(double xi, double t) {
    const ProfileJet j = profile_jet(xi, t);
    const double rhs =
        (j.value * j.value * j.d2 - j.value * j.d1 * j.d1) / (kFourPi * kFourPi) + j.value +
        j.d1 * (1.0 - 2.0 * xi);
    return j.dt - rhs;
}

double curvature_bound(double t, double t0) {
    if (std::isinf(t0) && t0 > 0) return 1.0;
    const double x = std::exp(-2.0 * (t + t0));
    if (x == 0.0) return 1.0;
    return x_coth_x(x);
}

AxisymMetric as_axisym(const RosenauState& s, const ColatitudeGrid& grid) {
    const double h = s.h;
    std::vector<double> u(grid.n() + 1);
    const double log_pref = std::numbers::ln2 + log_sinh(h) - std::log(h);
    for (int i = 0; i <= grid.n(); ++i) {
        const double sn = grid.sin_node(i);
        const double cs = std::cos(grid.psi(i));
        const double w = 1.0 + cs * cs;
        double log_den;
        if (h > kLogSinhH) {
            // sin^2 cosh h dominates; keep it in log form to dodge overflow
            log_den = (h - std::numbers::ln2) + std::log(sn * sn + w * std::exp(-(h - std::numbers::ln2)));
        } else {
            log_den = std::log(w + sn * sn * std::cosh(h));
        }
        u[i] = 0.5 * (log_pref - log_den);
    }
    return AxisymMetric(grid, std::move(u), s.t);
}

}  // namespace rosenau
}  // namespace ricci
