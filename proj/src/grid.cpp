#include "ricci/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ricci {

ColatitudeGrid::ColatitudeGrid(int n) : n_(n) {
    if (n < 16 || n % 2 != 0) {
        throw std::invalid_argument("ColatitudeGrid: n must be even and >= 16");
    }
    const double pi = std::numbers::pi;
    h_ = pi / n;

    psi_.resize(n + 1);
    sin_node_.resize(n + 1);
    // fill the lower half, mirror the upper half so that psi_[n-i] == pi - psi_[i]
    // holds exactly in floating point
    for (int i = 0; i <= n / 2; ++i) {
        psi_[i] = i * h_;
        psi_[n - i] = pi - psi_[i];
        sin_node_[i] = std::sin(psi_[i]);
        sin_node_[n - i] = sin_node_[i];
    }
    psi_[0] = 0.0;
    psi_[n] = pi;

    sin_half_.resize(n);
    for (int i = 0; i < n / 2; ++i) {
        sin_half_[i] = std::sin((i + 0.5) * h_);
        sin_half_[n - 1 - i] = sin_half_[i];
    }

    // cell measures from half-node cosines; the sum telescopes to exactly 2
    std::vector<double> cos_half(n);
    for (int i = 0; i < n / 2; ++i) {
        cos_half[i] = std::cos((i + 0.5) * h_);
        cos_half[n - 1 - i] = -cos_half[i];
    }
    measure_.resize(n + 1);
    measure_[0] = 1.0 - cos_half[0];
    for (int i = 1; i < n; ++i) measure_[i] = cos_half[i - 1] - cos_half[i];
    measure_[n] = cos_half[n - 1] + 1.0;
}

}  // namespace ricci
