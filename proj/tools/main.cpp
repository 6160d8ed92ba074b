#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ricci/comparison.hpp"
#include "ricci/config.hpp"
#include "ricci/csv.hpp"
#include "ricci/flow.hpp"
#include "ricci/rosenau.hpp"
#include "ricci/tolerance.hpp"
#include "ricci/verify.hpp"
#include "ricci/version.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitBlowup = 2;
constexpr int kExitMonitor = 3;

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

struct GlobalOpts {
    std::string config_path;
    std::string out_dir;
    int grid_n = 0;  // 0 = take from config
    bool quiet = false;
};

ricci::ScenarioConfig load_config(const GlobalOpts& g) {
    ricci::ScenarioConfig cfg;
    if (!g.config_path.empty()) cfg = ricci::ScenarioConfig::parse_file(g.config_path);
    if (!g.out_dir.empty()) cfg.output_dir = g.out_dir;
    if (g.grid_n != 0) cfg.grid_n = g.grid_n;
    cfg.validate();
    return cfg;
}

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create directory '" + dir.string() + "': " + ec.message());
}

ordered_json config_echo(const ricci::ScenarioConfig& cfg) {
    ordered_json j;
    switch (cfg.initial.kind) {
        case ricci::InitialData::Kind::Round: j["initial.kind"] = "round"; break;
        case ricci::InitialData::Kind::Rosenau: j["initial.kind"] = "rosenau"; break;
        case ricci::InitialData::Kind::Fourier: j["initial.kind"] = "fourier"; break;
    }
    if (cfg.initial.kind == ricci::InitialData::Kind::Rosenau) {
        j["initial.rosenau_s"] = cfg.initial.rosenau_s;
    }
    if (cfg.initial.kind == ricci::InitialData::Kind::Fourier) {
        std::string modes;
        for (const auto& fm : cfg.initial.fourier) {
            if (!modes.empty()) modes += ",";
            modes += std::to_string(fm.mode) + ":" + ricci::format_double(fm.amplitude);
        }
        j["initial.fourier"] = modes;
    }
    j["grid.n"] = cfg.grid_n;
    j["flow.t_end"] = cfg.t_end;
    j["flow.safety"] = cfg.safety;
    j["flow.renormalize"] = cfg.renormalize;
    j["output.times"] = cfg.effective_output_times();
    j["output.dir"] = cfg.output_dir;
    j["comparison.enabled"] = cfg.comparison_enabled;
    j["profile.xi_samples"] = cfg.xi_samples;
    return j;
}

struct RunResult {
    ricci::Trajectory traj;
    std::optional<ricci::ComparisonReport> report;
};

RunResult run_scenario(const ricci::ScenarioConfig& cfg) {
    const ricci::AxisymMetric m0 = cfg.build_initial();
    ricci::FlowParams p;
    p.safety = cfg.safety;
    p.t_end = cfg.t_end;
    p.renormalize_each_step = cfg.renormalize;
    p.output_times = cfg.effective_output_times();

    RunResult r;
    r.traj = ricci::evolve(m0, p);
    if (cfg.comparison_enabled && !r.traj.snapshots.empty()) {
        const auto xi = ricci::comparison_xi_grid(cfg.xi_samples);
        const auto p0 = ricci::build_profile(r.traj.snapshots.front(), xi);
        const double t0 = ricci::solve_t0(p0);
        r.report = ricci::monitor(r.traj, t0, cfg.xi_samples);
    }
    return r;
}

void write_series(const ricci::ScenarioConfig& cfg, const RunResult& r, const fs::path& dir) {
    ricci::CsvWriter series((dir / "series.csv").string(),
                            {"t", "max_K", "min_K", "bound", "bound_margin", "area", "l1_dev",
                             "l1_bound", "min_profile_margin", "sup_dK"});
    if (r.report) {
        for (const auto& rec : r.report->records) {
            series.row(std::vector<double>{rec.time, rec.max_curvature, rec.min_curvature,
                                           rec.curvature_bound, rec.bound_margin, rec.area,
                                           rec.l1_deviation, rec.l1_bound, rec.min_profile_margin,
                                           rec.sup_dpsi_curvature});
        }
        return;
    }
    for (const auto& snap : r.traj.snapshots) {
        const ricci::CurvatureField k = ricci::gauss_curvature(snap);
        const int n = snap.grid().n();
        const double h = snap.grid().spacing();
        double sup_dk = 0.0;
        for (int i = 1; i < n; ++i) {
            sup_dk = std::max(sup_dk, std::abs(k.k_samples[i + 1] - k.k_samples[i - 1]) / (2.0 * h));
        }
        series.row(std::vector<double>{snap.time(), k.max(), k.min(), kNan, kNan,
                                       ricci::total_area(snap), ricci::l1_deviation(snap), kNan,
                                       kNan, sup_dk});
    }
    (void)cfg;
}

void write_snapshots(const ricci::ScenarioConfig& cfg, const RunResult& r, const fs::path& dir) {
    ensure_dir(dir / "snapshots");
    const auto xi = ricci::comparison_xi_grid(cfg.xi_samples);
    for (std::size_t k = 0; k < r.traj.snapshots.size(); ++k) {
        const auto& snap = r.traj.snapshots[k];
        char idx[16];
        std::snprintf(idx, sizeof(idx), "%03zu", k);

        ricci::CsvWriter state((dir / "snapshots" / ("state_" + std::string(idx) + ".csv")).string(),
                               {"t", "psi", "u", "K"});
        const ricci::CurvatureField kf = ricci::gauss_curvature(snap);
        for (int i = 0; i <= snap.grid().n(); ++i) {
            state.row(std::vector<double>{snap.time(), snap.grid().psi(i), snap.u(i),
                                          kf.k_samples[i]});
        }

        ricci::CsvWriter prof((dir / "snapshots" / ("profile_" + std::string(idx) + ".csv")).string(),
                              {"t", "xi", "phi", "dphi", "d2phi"});
        const ricci::IsoperimetricProfile p = ricci::build_profile(snap, xi);
        for (std::size_t i = 0; i < xi.size(); ++i) {
            prof.row(std::vector<double>{snap.time(), xi[i], p.value[i], p.d1[i], p.d2[i]});
        }
    }
}

int cmd_simulate(const GlobalOpts& g) {
    const ricci::ScenarioConfig cfg = load_config(g);
    const fs::path dir(cfg.output_dir);
    ensure_dir(dir);
    const RunResult r = run_scenario(cfg);
    write_series(cfg, r, dir);
    write_snapshots(cfg, r, dir);
    if (!g.quiet) {
        std::cout << "simulate: " << r.traj.snapshots.size() << " snapshots, "
                  << r.traj.stats.dt.size() << " steps -> " << dir.string() << "\n";
    }
    if (r.traj.blew_up) {
        std::cerr << "blowup detected at t = " << r.traj.blowup_time << "\n";
        return kExitBlowup;
    }
    return kExitOk;
}

struct MonitorVerdict {
    std::string name;
    bool pass = true;
    std::string detail;
};

std::vector<MonitorVerdict> judge(const ricci::ComparisonReport& rep, int grid_n,
                                  bool renormalized, double t_start) {
    const double tol = ricci::monitor_tolerance(grid_n);
    std::vector<MonitorVerdict> out;
    auto fail_at = [](double t, double v) {
        return "first failure at t = " + ricci::format_double(t) + " (value " +
               ricci::format_double(v) + ")";
    };

    {
        MonitorVerdict v{"profile_margin", true, "all certified margins >= -tolerance"};
        bool any_uncertified = false;
        for (const auto& rec : rep.records) {
            if (!rec.certified) {
                any_uncertified = true;
                continue;
            }
            if (rec.min_profile_margin < -tol) {
                v.pass = false;
                v.detail = fail_at(rec.time, rec.min_profile_margin);
                break;
            }
        }
        if (v.pass && any_uncertified) v.detail = "WARN: uncertified snapshots excluded";
        out.push_back(v);
    }
    {
        MonitorVerdict v{"margin_monotonicity", true, "margins stay above the initial minimum"};
        double first_margin = 0.0;
        bool have_first = false;
        for (const auto& rec : rep.records) {
            if (!rec.certified) continue;
            if (!have_first) {
                first_margin = rec.min_profile_margin;
                have_first = true;
                continue;
            }
            if (rec.min_profile_margin < first_margin - tol) {
                v.pass = false;
                v.detail = fail_at(rec.time, rec.min_profile_margin - first_margin);
                break;
            }
        }
        out.push_back(v);
    }
    {
        MonitorVerdict v{"curvature_bound", true, "max K <= bound within tolerance"};
        for (const auto& rec : rep.records) {
            if (rec.bound_margin < -(1e-3 * rec.curvature_bound + tol)) {
                v.pass = false;
                v.detail = fail_at(rec.time, rec.bound_margin);
                break;
            }
        }
        out.push_back(v);
    }
    {
        MonitorVerdict v{"l1_decay", true, "int |K-1| within the exponential bound for t >= 0.5"};
        for (const auto& rec : rep.records) {
            if (rec.time < t_start + 0.5) continue;
            if (rec.l1_deviation > rec.l1_bound * (1.0 + 1e-3) + tol) {
                v.pass = false;
                v.detail = fail_at(rec.time, rec.l1_deviation - rec.l1_bound);
                break;
            }
        }
        out.push_back(v);
    }
    {
        MonitorVerdict v{"lower_barrier", true, "min K >= -1/(e^t - 1) - 1e-6"};
        for (const auto& rec : rep.records) {
            if (rec.time <= 1e-12) continue;
            const double barrier = -1.0 / (std::exp(rec.time) - 1.0);
            if (rec.min_curvature < barrier - 1e-6) {
                v.pass = false;
                v.detail = fail_at(rec.time, rec.min_curvature - barrier);
                break;
            }
        }
        out.push_back(v);
    }
    if (renormalized) {
        MonitorVerdict v{"area_conservation", true, "|area - 4pi| <= 1e-10"};
        for (const auto& rec : rep.records) {
            if (std::abs(rec.area - 4.0 * std::numbers::pi) > 1e-10) {
                v.pass = false;
                v.detail = fail_at(rec.time, rec.area - 4.0 * std::numbers::pi);
                break;
            }
        }
        out.push_back(v);
    }
    {
        MonitorVerdict v{"gauss_bonnet", true, "|int K dmu - 4pi| <= 1e-6"};
        for (const auto& rec : rep.records) {
            if (std::abs(rec.total_curvature - 4.0 * std::numbers::pi) > 1e-6) {
                v.pass = false;
                v.detail = fail_at(rec.time, rec.total_curvature - 4.0 * std::numbers::pi);
                break;
            }
        }
        out.push_back(v);
    }
    return out;
}

int cmd_compare(const GlobalOpts& g) {
    const ricci::ScenarioConfig cfg = load_config(g);
    const fs::path dir(cfg.output_dir);
    ensure_dir(dir);

    ricci::ScenarioConfig run_cfg = cfg;
    run_cfg.comparison_enabled = true;
    const RunResult r = run_scenario(run_cfg);
    if (r.traj.blew_up) {
        std::cerr << "blowup detected at t = " << r.traj.blowup_time << "\n";
        return kExitBlowup;
    }
    const ricci::ComparisonReport& rep = *r.report;

    {
        ricci::CsvWriter margins((dir / "margins.csv").string(),
                                 {"t", "xi", "h_or_phi_u", "phi_model", "margin", "certified"});
        for (const auto& rec : rep.records) {
            for (std::size_t i = 0; i < rep.xi.size(); ++i) {
                margins.row(std::vector<double>{rec.time, rep.xi[i], rec.profile_values[i],
                                                rec.model_values[i],
                                                rec.profile_values[i] - rec.model_values[i],
                                                rec.certified ? 1.0 : 0.0});
            }
        }
    }

    const auto verdicts = judge(rep, cfg.grid_n, cfg.renormalize, cfg.start_time());

    ordered_json j;
    j["version"] = ricci::kVersion;
    j["config"] = config_echo(cfg);
    if (std::isinf(rep.t0)) {
        j["t0"] = "inf";
    } else {
        j["t0"] = rep.t0;
    }
    j["tolerance"] = ricci::monitor_tolerance(cfg.grid_n);
    j["monitors"] = ordered_json::array();
    bool all_pass = true;
    for (const auto& v : verdicts) {
        j["monitors"].push_back({{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
        all_pass = all_pass && v.pass;
    }
    j["snapshots"] = ordered_json::array();
    for (const auto& rec : rep.records) {
        j["snapshots"].push_back({{"t", rec.time},
                                  {"certified", rec.certified},
                                  {"max_K", rec.max_curvature},
                                  {"min_K", rec.min_curvature},
                                  {"bound", rec.curvature_bound},
                                  {"bound_margin", rec.bound_margin},
                                  {"min_profile_margin", rec.min_profile_margin},
                                  {"margin_argmin_xi", rec.margin_argmin_xi},
                                  {"l1_dev", rec.l1_deviation},
                                  {"l1_bound", rec.l1_bound},
                                  {"area", rec.area},
                                  {"total_curvature", rec.total_curvature},
                                  {"sup_dK", rec.sup_dpsi_curvature}});
    }
    std::ofstream out(dir / "report.json");
    if (!out) throw std::runtime_error("cannot write report.json");
    out << j.dump(2) << "\n";

    if (!g.quiet) {
        for (const auto& v : verdicts) {
            std::cout << (v.pass ? "PASS " : "FAIL ") << v.name << ": " << v.detail << "\n";
        }
    }
    return all_pass ? kExitOk : kExitMonitor;
}

std::vector<double> parse_list(const std::string& text, const std::string& what) {
    std::vector<double> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (item == "inf") {
            out.push_back(kInf);
        } else {
            try {
                out.push_back(std::stod(item));
            } catch (const std::exception&) {
                throw ricci::ConfigError(what, "bad number '" + item + "'");
            }
        }
    }
    if (out.empty()) throw ricci::ConfigError(what, "empty list");
    return out;
}

int cmd_rosenau(const GlobalOpts& g, const std::string& t_list, const std::string& xi_list) {
    const fs::path dir(g.out_dir.empty() ? "out" : g.out_dir);
    ensure_dir(dir);
    const auto ts = parse_list(t_list, "--t");
    const auto xis = parse_list(xi_list, "--xi");
    for (double x : xis) {
        if (!(x > 0.0) || !(x < 1.0)) throw ricci::ConfigError("--xi", "xi must lie in (0, 1)");
    }
    ricci::CsvWriter csv((dir / "rosenau.csv").string(),
                         {"t", "xi", "profile", "K_pole", "K_equator", "bound"});
    for (double t : ts) {
        double k_pole, k_eq;
        if (std::isinf(t)) {
            k_pole = k_eq = 1.0;
        } else {
            const ricci::RosenauState s = ricci::RosenauState::from_time(t);
            k_pole = ricci::rosenau::curvature_bound(t, 0.0);
            k_eq = ricci::rosenau::curvature_cylinder(s, 0.0);
        }
        const double bound = ricci::rosenau::curvature_bound(t, 0.0);
        for (double x : xis) {
            csv.row(std::vector<double>{t, x, ricci::rosenau::profile(x, t), k_pole, k_eq, bound});
        }
    }
    if (!g.quiet) std::cout << "rosenau: wrote " << (dir / "rosenau.csv").string() << "\n";
    return kExitOk;
}

int cmd_verify(const GlobalOpts& g) {
    bool all = true;
    for (int n : {64, 128}) {
        const auto results = ricci::run_verification(n);
        if (!g.quiet) std::printf("-- invariants at n = %d --\n", n);
        for (const auto& r : results) {
            all = all && r.pass;
            if (!g.quiet || !r.pass) {
                std::printf("%-44s %s  %s\n", r.name.c_str(), r.pass ? "PASS" : "FAIL",
                            r.detail.c_str());
            }
        }
    }
    std::printf("verify: %s\n", all ? "all invariants hold" : "FAILURES present");
    return all ? kExitOk : kExitConfig;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Normalized Ricci flow laboratory on the two-sphere"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--config", g.config_path, "scenario config file")->check(CLI::ExistingFile);
    app.add_option("--out", g.out_dir, "output directory (overrides output.dir)");
    app.add_option("--n", g.grid_n, "grid intervals (overrides grid.n)");
    app.add_flag("--quiet", g.quiet, "suppress progress output");

    auto* sim = app.add_subcommand("simulate", "run a flow and write series/snapshot CSVs");
    auto* cmp = app.add_subcommand("compare", "run the comparison monitors, write report.json");
    auto* ros = app.add_subcommand("rosenau", "emit Rosenau closed-form tables");
    auto* ver = app.add_subcommand("verify", "run the invariant suite at n = 64, 128");

    std::string t_list = "0,0.25,0.5,1,2,inf";
    std::string xi_list = "0.001,0.01,0.1,0.25,0.5,0.75,0.9,0.99,0.999";
    ros->add_option("--t", t_list, "comma list of times ('inf' allowed)");
    ros->add_option("--xi", xi_list, "comma list of area fractions in (0,1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (sim->parsed()) return cmd_simulate(g);
        if (cmp->parsed()) return cmd_compare(g);
        if (ros->parsed()) return cmd_rosenau(g, t_list, xi_list);
        if (ver->parsed()) return cmd_verify(g);
    } catch (const ricci::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
