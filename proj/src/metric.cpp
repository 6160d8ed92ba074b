#include "ricci/metric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ricci/quadrature.hpp"

namespace ricci {

namespace {
// Beyond this the conformal factor e^{2u} is numerically meaningless for any
// state this laboratory produces; reject instead of overflowing later.
constexpr double kMaxAbsU = 50.0;
}  // namespace

AxisymMetric::AxisymMetric(ColatitudeGrid grid, std::vector<double> u, double time)
    : grid_(std::move(grid)), u_(std::move(u)), time_(time) {
    if (static_cast<int>(u_.size()) != grid_.n() + 1) {
        throw std::invalid_argument("AxisymMetric: u must have n+1 samples");
    }
    for (double v : u_) {
        if (!std::isfinite(v)) throw std::invalid_argument("AxisymMetric: non-finite u sample");
        if (std::abs(v) > kMaxAbsU) {
            throw std::invalid_argument("AxisymMetric: |u| > 50, conformal factor out of range");
        }
    }
}

double CurvatureField::max() const { return *std::max_element(k_samples.begin(), k_samples.end()); }
double CurvatureField::min() const { return *std::min_element(k_samples.begin(), k_samples.end()); }

CurvatureField gauss_curvature(const AxisymMetric& m, Exec exec) {
    std::vector<double> k(m.u().size());
    kernels::curvature(m.grid(), m.u(), k, exec);
    return CurvatureField{m.grid(), std::move(k)};
}

double total_area(const AxisymMetric& m) {
    const auto& g = m.grid();
    std::vector<double> f(g.n() + 1);
    for (int i = 0; i <= g.n(); ++i) f[i] = std::exp(2.0 * m.u(i)) * g.sin_node(i);
    return 2.0 * std::numbers::pi * simpson(f, g.spacing());
}

AxisymMetric normalize(const AxisymMetric& m) {
    const double area = total_area(m);
    if (!(area > 0.0) || !std::isfinite(area)) {
        throw std::invalid_argument("normalize: area must be finite and positive");
    }
    const double shift = -0.5 * std::log(area / (4.0 * std::numbers::pi));
    std::vector<double> u = m.u();
    for (double& v : u) v += shift;
    return m.with_u(std::move(u), m.time());
}

double total_curvature(const AxisymMetric& m) {
    const auto& g = m.grid();
    const CurvatureField k = gauss_curvature(m);
    double acc = 0.0;
    for (int i = 0; i <= g.n(); ++i) {
        acc += g.cell_measure(i) * k.k_samples[i] * std::exp(2.0 * m.u(i));
    }
    return 2.0 * std::numbers::pi * acc;
}

double pole_regularity_defect(const AxisymMetric& m) {
    const int n = m.grid().n();
    const double h = m.grid().spacing();
    const double north = std::abs(m.u(1) - m.u(0)) / h;
    const double south = std::abs(m.u(n) - m.u(n - 1)) / h;
    return std::max(north, south);
}

RitoreCheck ritore_criterion(const AxisymMetric& m) {
    const CurvatureField k = gauss_curvature(m);
    const int n = m.grid().n();
    for (int i = 0; i <= n; ++i) {
        if (!(k.k_samples[i] > 0.0)) return {false, i};
    }
    for (int i = 1; i <= n / 2; ++i) {
        if (k.k_samples[i] > k.k_samples[i - 1]) return {false, i};
    }
    return {true, -1};
}

}  // namespace ricci
