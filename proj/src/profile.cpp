#include "ricci/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ricci/quadrature.hpp"

namespace ricci {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFourPi = 4.0 * std::numbers::pi;

constexpr int kBisectIterations = 64;

}  // namespace

CapGeometry::CapGeometry(const AxisymMetric& m)
    : u_(m.u(), m.grid().spacing()), h_(m.grid().spacing()), n_(m.grid().n()) {
    const auto& g = m.grid();
    std::vector<double> f(n_ + 1);
    for (int i = 0; i <= n_; ++i) f[i] = std::exp(2.0 * m.u(i)) * g.sin_node(i);
    prefix_ = simpson_prefix(f, h_);
}

double CapGeometry::area_from_north(double psi) const {
    int pairs = static_cast<int>(std::floor(psi / (2.0 * h_)));
    pairs = std::clamp(pairs, 0, n_ / 2);
    double acc = prefix_[pairs];
    const double a = 2.0 * h_ * pairs;
    if (psi > a) {
        // partial-interval Simpson on [a, psi]; reduces bitwise to the next
        // prefix panel when psi reaches the even node, so A is continuous
        auto f = [&](double s) { return std::exp(2.0 * u_.value(s)) * std::sin(s); };
        const double mid = 0.5 * (a + psi);
        acc += (psi - a) / 6.0 * (f(a) + 4.0 * f(mid) + f(psi));
    }
    return 2.0 * kPi * acc;
}

double CapGeometry::area(double psi) const {
    // averaged with the complementary cap so that A(psi) + A(pi - psi) equals
    // the total area exactly; reflection-symmetric metrics then get exactly
    // symmetric profiles
    psi = std::clamp(psi, 0.0, kPi);
    const double total = 2.0 * kPi * prefix_[n_ / 2];
    return 0.5 * (area_from_north(psi) + (total - area_from_north(kPi - psi)));
}

double CapGeometry::length(double psi) const {
    return 2.0 * kPi * std::exp(u_.value(psi)) * std::sin(psi);
}

double CapGeometry::area_rate(double psi) const {
    return 2.0 * kPi * std::exp(2.0 * u_.value(psi)) * std::sin(psi);
}

double CapGeometry::length_rate(double psi) const {
    const auto j = u_.jet(psi);
    return 2.0 * kPi * std::exp(j.value) * (std::cos(psi) + j.d1 * std::sin(psi));
}

double CapGeometry::invert_area(double xi) const {
    if (!(xi > 0.0) || !(xi < 1.0)) {
        throw std::invalid_argument("invert_area: xi must lie in (0, 1)");
    }
    const double target = kFourPi * xi;
    double lo = 0.0, hi = kPi;
    for (int it = 0; it < kBisectIterations; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (area(mid) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

CapGeometry::ProfilePoint CapGeometry::at_fraction(double xi) const {
    const double psi = invert_area(xi);
    const auto j = u_.jet(psi);
    const double sn = std::sin(psi), cs = std::cos(psi);
    const double eu = std::exp(j.value);
    const double e2u = eu * eu;
    const double value = 2.0 * kPi * eu * sn;
    const double ap = 2.0 * kPi * e2u * sn;
    const double lp = 2.0 * kPi * eu * (cs + j.d1 * sn);
    // second derivatives in psi of A and L
    const double app = 2.0 * kPi * e2u * (2.0 * j.d1 * sn + cs);
    const double lpp = 2.0 * kPi * eu * ((j.d2 + j.d1 * j.d1 - 1.0) * sn + 2.0 * j.d1 * cs);
    const double d1 = kFourPi * lp / ap;
    const double d2 = kFourPi * kFourPi * (lpp * ap - lp * app) / (ap * ap * ap);
    return ProfilePoint{psi, value, d1, d2};
}

double cap_area(const AxisymMetric& m, double psi) {
    if (psi < 0.0 || psi > kPi) throw std::invalid_argument("cap_area: psi outside [0, pi]");
    return CapGeometry(m).area(psi);
}

double cap_length(const AxisymMetric& m, double psi) { return CapGeometry(m).length(psi); }

double invert_area(const AxisymMetric& m, double xi) { return CapGeometry(m).invert_area(xi); }

IsoperimetricProfile build_profile(const AxisymMetric& m, std::span<const double> xi_samples,
                                   Exec exec) {
    for (double x : xi_samples) {
        if (!(x > 0.0) || !(x < 1.0)) {
            throw std::invalid_argument("build_profile: xi samples must lie in (0, 1)");
        }
    }
    const CapGeometry caps(m);
    const int count = static_cast<int>(xi_samples.size());

    IsoperimetricProfile p;
    p.xi.assign(xi_samples.begin(), xi_samples.end());
    p.value.resize(count);
    p.d1.resize(count);
    p.d2.resize(count);
    p.source = ProfileSource::FromMetric;
    p.time = m.time();

    if (exec == Exec::Serial) {
        for (int i = 0; i < count; ++i) {
            const auto pt = caps.at_fraction(xi_samples[i]);
            p.value[i] = pt.value;
            p.d1[i] = pt.d1;
            p.d2[i] = pt.d2;
        }
    } else {
#pragma omp parallel for schedule(static) if (count >= 32)
        for (int i = 0; i < count; ++i) {
            const auto pt = caps.at_fraction(xi_samples[i]);
            p.value[i] = pt.value;
            p.d1[i] = pt.d1;
            p.d2[i] = pt.d2;
        }
    }

    p.certified = ritore_criterion(m).satisfied;
    p.sup_curvature = gauss_curvature(m).max();
    return p;
}

double geodesic_curvature_latitude(const AxisymMetric& m, double psi) {
    if (!(psi > 0.0) || !(psi < kPi)) {
        throw std::invalid_argument("geodesic_curvature_latitude: psi must lie in (0, pi)");
    }
    EvenCubicInterpolant u(m.u(), m.grid().spacing());
    const auto j = u.jet(psi);
    return std::exp(-j.value) * (std::cos(psi) / std::sin(psi) + j.d1);
}

CapVariationResidual cap_variation_check(const AxisymMetric& m, double psi) {
    const double h = m.grid().spacing();
    if (!(psi > h) || !(psi < kPi - h)) {
        throw std::invalid_argument("cap_variation_check: psi must be interior");
    }
    const CapGeometry caps(m);
    const double eu = std::exp(caps.u().value(psi));
    const double dA_ds = (caps.area(psi + h) - caps.area(psi - h)) / (2.0 * h) / eu;
    const double dL_ds = (caps.length(psi + h) - caps.length(psi - h)) / (2.0 * h) / eu;
    const double k = geodesic_curvature_latitude(m, psi);
    return CapVariationResidual{dA_ds - caps.length(psi), dL_ds - k * caps.length(psi)};
}

SupCurvatureFit asymptotic_sup_curvature(const IsoperimetricProfile& p, double window_lo,
                                         double window_hi) {
    // linear least squares for y = a + b sqrt(xi) on the window samples
    double s0 = 0, s1 = 0, s2 = 0, sy = 0, sxy = 0;
    int used = 0;
    for (std::size_t i = 0; i < p.xi.size(); ++i) {
        const double x = p.xi[i];
        if (x < window_lo || x > window_hi) continue;
        const double r = std::sqrt(x);
        const double y = (kFourPi * r - p.value[i]) / (2.0 * kPi * x * r);
        s0 += 1.0;
        s1 += r;
        s2 += r * r;
        sy += y;
        sxy += r * y;
        ++used;
    }
    SupCurvatureFit fit;
    fit.samples_used = used;
    const double det = s0 * s2 - s1 * s1;
    if (used < 3 || !(std::abs(det) > 1e-12 * s0 * s2)) {
        fit.well_conditioned = false;
        return fit;
    }
    fit.value = (sy * s2 - sxy * s1) / det;
    fit.well_conditioned = true;
    return fit;
}

double profile_equation_residual(double value, double d1, double d2, double dt_value, double xi) {
    const double rhs =
        (value * value * d2 - value * d1 * d1) / (kFourPi * kFourPi) + value + d1 * (1.0 - 2.0 * xi);
    return dt_value - rhs;
}

}  // namespace ricci
