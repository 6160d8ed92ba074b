#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace ricci {

/// Composite Simpson rule on a uniform grid; f.size() - 1 must be even.
inline double simpson(std::span<const double> f, double h) {
    const std::size_t n = f.size() - 1;
    if (n % 2 != 0) throw std::invalid_argument("simpson: needs an even interval count");
    double odd = 0.0, even = 0.0;
    for (std::size_t i = 1; i < n; i += 2) odd += f[i];
    for (std::size_t i = 2; i < n; i += 2) even += f[i];
    return h / 3.0 * (f[0] + f[n] + 4.0 * odd + 2.0 * even);
}

/// Running Simpson sums at even nodes: out[k] = integral over [x_0, x_{2k}].
inline std::vector<double> simpson_prefix(std::span<const double> f, double h) {
    const std::size_t n = f.size() - 1;
    if (n % 2 != 0) throw std::invalid_argument("simpson_prefix: needs an even interval count");
    std::vector<double> out(n / 2 + 1);
    out[0] = 0.0;
    for (std::size_t k = 1; k <= n / 2; ++k) {
        out[k] = out[k - 1] + h / 3.0 * (f[2 * k - 2] + 4.0 * f[2 * k - 1] + f[2 * k]);
    }
    return out;
}

}  // namespace ricci
