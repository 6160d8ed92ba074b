#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ricci/metric.hpp"

namespace ricci {

/// Config-file or config-value problem; `field` names the offending key.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& what)
        : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

struct FourierMode {
    int mode = 2;         // even, >= 2
    double amplitude = 0.0;
};

struct InitialData {
    enum class Kind { Round, Rosenau, Fourier };
    Kind kind = Kind::Round;
    double rosenau_s = 0.0;            // flow time of the Rosenau initial state
    std::vector<FourierMode> fourier;  // u0 = sum a_k cos(k psi)
};

/// Scenario description parsed from a flat key-value file
/// (dotted keys, one per line, '#' comments).
struct ScenarioConfig {
    InitialData initial;
    int grid_n = 256;
    double t_end = 1.0;
    double safety = 0.5;
    bool renormalize = true;
    std::vector<double> output_times;  // empty -> 9 uniform samples of [start, t_end]
    bool comparison_enabled = true;
    int xi_samples = 200;
    std::string output_dir = "out";

    static ScenarioConfig parse(const std::string& text);
    static ScenarioConfig parse_file(const std::string& path);

    void validate() const;  // throws ConfigError

    double start_time() const;
    std::vector<double> effective_output_times() const;

    /// Build the normalized initial metric the scenario describes.
    AxisymMetric build_initial() const;
};

}  // namespace ricci
