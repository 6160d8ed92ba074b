#pragma once

#include <vector>

namespace ricci {

/// Uniform colatitude grid psi_i = i*pi/n on [0, pi].
///
/// Besides the nodes it carries the two precomputed tables the discrete
/// operators need: sines at half nodes (flux points) and the cell measures
/// m_i = integral of sin(psi) over the cell owned by node i.  The tables are
/// built symmetric under psi -> pi - psi by construction, so reflection
/// symmetry of the data survives every operator bitwise.
class ColatitudeGrid {
public:
    /// n must be even and >= 16.
    explicit ColatitudeGrid(int n);

    int n() const { return n_; }
    double spacing() const { return h_; }
    double psi(int i) const { return psi_[i]; }
    const std::vector<double>& nodes() const { return psi_; }

    /// sin at psi_{i+1/2}, index i in [0, n-1].
    double sin_half(int i) const { return sin_half_[i]; }
    const std::vector<double>& sin_half_nodes() const { return sin_half_; }

    /// Cell measure of node i; the measures sum to exactly 2.
    double cell_measure(int i) const { return measure_[i]; }
    const std::vector<double>& cell_measures() const { return measure_; }

    /// sin(psi_i), mirrored tables.
    double sin_node(int i) const { return sin_node_[i]; }

    bool operator==(const ColatitudeGrid& other) const { return n_ == other.n_; }

private:
    int n_;
    double h_;
    std::vector<double> psi_;
    std::vector<double> sin_half_;
    std::vector<double> sin_node_;
    std::vector<double> measure_;
};

}  // namespace ricci
