#include "ricci/kernels.hpp"

namespace ricci::kernels {

// Worksharing only pays off well above desk-scale grids; below the cutoff the
// parallel entry points run the same loop on the calling thread.
namespace {
constexpr int kNodeParallelCutoff = 4096;
}

void curvature(const ColatitudeGrid& g, std::span<const double> u, std::span<double> out,
               Exec exec) {
    const int count = static_cast<int>(u.size());
    if (exec == Exec::Serial) {
        for (int i = 0; i < count; ++i) out[i] = detail::curvature_at(g, u, i);
        return;
    }
#pragma omp parallel for schedule(static) if (count >= kNodeParallelCutoff)
    for (int i = 0; i < count; ++i) out[i] = detail::curvature_at(g, u, i);
}

void flow_rhs(const ColatitudeGrid& g, std::span<const double> u, std::span<double> out,
              Exec exec) {
    const int count = static_cast<int>(u.size());
    if (exec == Exec::Serial) {
        for (int i = 0; i < count; ++i) out[i] = detail::flow_rhs_at(g, u, i);
        return;
    }
#pragma omp parallel for schedule(static) if (count >= kNodeParallelCutoff)
    for (int i = 0; i < count; ++i) out[i] = detail::flow_rhs_at(g, u, i);
}

}  // namespace ricci::kernels
