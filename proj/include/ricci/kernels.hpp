#pragma once

#include <cmath>
#include <span>

#include "ricci/grid.hpp"

namespace ricci {

/// Which loop implementation to run.  Parallel uses OpenMP worksharing; the
/// serial path is the reference the parallel one is tested and benchmarked
/// against.  Both write each output slot from its own iteration only, so the
/// results are bit-identical for any thread count.
enum class Exec { Parallel, Serial };

namespace kernels {

namespace detail {

/// Flux-form Laplace-Beltrami of u at node i: (F_{i+1/2} - F_{i-1/2}) / m_i
/// with F = sin(psi_half) * du/h and zero flux through the poles.  The flux
/// form makes the cell-measure integral of the result telescope to zero, so
/// the discrete total curvature is conserved exactly.
inline double laplace_beltrami_at(const ColatitudeGrid& g, std::span<const double> u, int i) {
    const int n = g.n();
    const double h = g.spacing();
    const double flux_right = (i < n) ? g.sin_half(i) * (u[i + 1] - u[i]) / h : 0.0;
    const double flux_left = (i > 0) ? g.sin_half(i - 1) * (u[i] - u[i - 1]) / h : 0.0;
    return (flux_right - flux_left) / g.cell_measure(i);
}

inline double curvature_at(const ColatitudeGrid& g, std::span<const double> u, int i) {
    const double e = std::exp(-2.0 * u[i]);
    return e * (1.0 - laplace_beltrami_at(g, u, i));
}

inline double flow_rhs_at(const ColatitudeGrid& g, std::span<const double> u, int i) {
    const double e = std::exp(-2.0 * u[i]);
    return e * laplace_beltrami_at(g, u, i) + 1.0 - e;
}

}  // namespace detail

/// Gauss curvature samples K_i = e^{-2u}(1 - LB u); pole rows reduce to the
/// axis limit e^{-2u}(1 - 2u'').
void curvature(const ColatitudeGrid& g, std::span<const double> u, std::span<double> out,
               Exec exec = Exec::Parallel);

/// Normalized Ricci flow right-hand side du/dt = e^{-2u} LB u + 1 - e^{-2u};
/// equals 1 - K node by node.
void flow_rhs(const ColatitudeGrid& g, std::span<const double> u, std::span<double> out,
              Exec exec = Exec::Parallel);

}  // namespace kernels
}  // namespace ricci
