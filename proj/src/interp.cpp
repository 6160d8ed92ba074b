#include "ricci/interp.hpp"

#include <algorithm>
#include <cmath>

namespace ricci {

EvenCubicInterpolant::EvenCubicInterpolant(std::span<const double> samples, double spacing)
    : y_(samples.begin(), samples.end()),
      h_(spacing),
      n_(static_cast<int>(samples.size()) - 1) {}

EvenCubicInterpolant::Coeffs EvenCubicInterpolant::coeffs(double s) const {
    int j = static_cast<int>(std::floor(s / h_));
    j = std::clamp(j, 0, n_ - 1);
    auto at = [&](int i) {
        if (i < 0) return y_[-i];
        if (i > n_) return y_[2 * n_ - i];
        return y_[i];
    };
    const double ym = at(j - 1), y0 = at(j), y1 = at(j + 1), y2 = at(j + 2);
    return Coeffs{
        y0,
        (-2.0 * ym - 3.0 * y0 + 6.0 * y1 - y2) / 6.0,
        (ym - 2.0 * y0 + y1) / 2.0,
        (-ym + 3.0 * y0 - 3.0 * y1 + y2) / 6.0,
        s / h_ - j,
    };
}

double EvenCubicInterpolant::value(double s) const {
    const Coeffs c = coeffs(s);
    return c.c0 + c.x * (c.c1 + c.x * (c.c2 + c.x * c.c3));
}

double EvenCubicInterpolant::deriv(double s) const {
    const Coeffs c = coeffs(s);
    return (c.c1 + c.x * (2.0 * c.c2 + 3.0 * c.x * c.c3)) / h_;
}

EvenCubicInterpolant::Jet EvenCubicInterpolant::jet(double s) const {
    const Coeffs c = coeffs(s);
    return Jet{
        c.c0 + c.x * (c.c1 + c.x * (c.c2 + c.x * c.c3)),
        (c.c1 + c.x * (2.0 * c.c2 + 3.0 * c.x * c.c3)) / h_,
        (2.0 * c.c2 + 6.0 * c.x * c.c3) / (h_ * h_),
    };
}

}  // namespace ricci
