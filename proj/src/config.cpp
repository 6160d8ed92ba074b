#include "ricci/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ricci/rosenau.hpp"

namespace ricci {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError(key, "expected a number, got '" + v + "'");
    }
}

int parse_int(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const int x = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError(key, "expected an integer, got '" + v + "'");
    }
}

bool parse_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError(key, "expected true/false, got '" + v + "'");
}

std::vector<FourierMode> parse_fourier(const std::string& key, const std::string& v) {
    std::vector<FourierMode> modes;
    for (const std::string& part : split(v, ',')) {
        if (part.empty()) continue;
        const auto colon = part.find(':');
        if (colon == std::string::npos) {
            throw ConfigError(key, "expected mode:amplitude pairs, got '" + part + "'");
        }
        FourierMode fm;
        fm.mode = parse_int(key, trim(part.substr(0, colon)));
        fm.amplitude = parse_double(key, trim(part.substr(colon + 1)));
        modes.push_back(fm);
    }
    if (modes.empty()) throw ConfigError(key, "no modes given");
    return modes;
}

}  // namespace

ScenarioConfig ScenarioConfig::parse(const std::string& text) {
    ScenarioConfig cfg;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(lineno), "expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "initial.kind") {
            if (value == "round") {
                cfg.initial.kind = InitialData::Kind::Round;
            } else if (value == "rosenau") {
                cfg.initial.kind = InitialData::Kind::Rosenau;
            } else if (value == "fourier") {
                cfg.initial.kind = InitialData::Kind::Fourier;
            } else {
                throw ConfigError(key, "must be round, rosenau or fourier");
            }
        } else if (key == "initial.rosenau_s") {
            cfg.initial.rosenau_s = parse_double(key, value);
        } else if (key == "initial.fourier") {
            cfg.initial.fourier = parse_fourier(key, value);
        } else if (key == "grid.n") {
            cfg.grid_n = parse_int(key, value);
        } else if (key == "flow.t_end") {
            cfg.t_end = parse_double(key, value);
        } else if (key == "flow.safety") {
            cfg.safety = parse_double(key, value);
        } else if (key == "flow.renormalize") {
            cfg.renormalize = parse_bool(key, value);
        } else if (key == "output.times") {
            cfg.output_times.clear();
            for (const std::string& part : split(value, ',')) {
                if (!part.empty()) cfg.output_times.push_back(parse_double(key, part));
            }
        } else if (key == "output.dir") {
            cfg.output_dir = value;
        } else if (key == "comparison.enabled") {
            cfg.comparison_enabled = parse_bool(key, value);
        } else if (key == "profile.xi_samples") {
            cfg.xi_samples = parse_int(key, value);
        } else {
            throw ConfigError(key, "unknown key");
        }
    }
    return cfg;
}

ScenarioConfig ScenarioConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

double ScenarioConfig::start_time() const {
    return initial.kind == InitialData::Kind::Rosenau ? initial.rosenau_s : 0.0;
}

void ScenarioConfig::validate() const {
    if (grid_n < 16 || grid_n % 2 != 0) throw ConfigError("grid.n", "must be even and >= 16");
    if (!(safety > 0.0) || safety > 1.0) throw ConfigError("flow.safety", "must be in (0, 1]");
    if (!(t_end >= start_time())) throw ConfigError("flow.t_end", "must be >= the start time");
    if (xi_samples < 16) throw ConfigError("profile.xi_samples", "must be >= 16");
    if (output_dir.empty()) throw ConfigError("output.dir", "must not be empty");
    if (initial.kind == InitialData::Kind::Fourier) {
        if (initial.fourier.empty()) throw ConfigError("initial.fourier", "no modes given");
        double amp_sum = 0.0;
        for (const FourierMode& fm : initial.fourier) {
            if (fm.mode < 2 || fm.mode % 2 != 0) {
                throw ConfigError("initial.fourier", "modes must be even and >= 2");
            }
            amp_sum += std::abs(fm.amplitude);
        }
        if (amp_sum > 2.0) throw ConfigError("initial.fourier", "sum of |amplitudes| must be <= 2");
    }
    const double t0 = start_time();
    for (std::size_t j = 0; j < output_times.size(); ++j) {
        if (output_times[j] < t0 || output_times[j] > t_end) {
            throw ConfigError("output.times", "times must lie in [start, t_end]");
        }
        if (j > 0 && !(output_times[j] > output_times[j - 1])) {
            throw ConfigError("output.times", "times must be strictly increasing");
        }
    }
}

std::vector<double> ScenarioConfig::effective_output_times() const {
    if (!output_times.empty()) return output_times;
    std::vector<double> out;
    const double a = start_time();
    if (t_end == a) return {a};
    for (int k = 0; k <= 8; ++k) out.push_back(a + (t_end - a) * k / 8.0);
    out.back() = t_end;
    return out;
}

AxisymMetric ScenarioConfig::build_initial() const {
    validate();
    ColatitudeGrid grid(grid_n);
    switch (initial.kind) {
        case InitialData::Kind::Round: {
            std::vector<double> u(grid_n + 1, 0.0);
            return normalize(AxisymMetric(std::move(grid), std::move(u), 0.0));
        }
        case InitialData::Kind::Rosenau: {
            const RosenauState s = RosenauState::from_time(initial.rosenau_s);
            return normalize(rosenau::as_axisym(s, grid));
        }
        case InitialData::Kind::Fourier: {
            std::vector<double> u(grid_n + 1, 0.0);
            for (int i = 0; i <= grid_n; ++i) {
                for (const FourierMode& fm : initial.fourier) {
                    u[i] += fm.amplitude * std::cos(fm.mode * grid.psi(i));
                }
            }
            return normalize(AxisymMetric(std::move(grid), std::move(u), 0.0));
        }
    }
    throw ConfigError("initial.kind", "unreachable");
}

}  // namespace ricci
