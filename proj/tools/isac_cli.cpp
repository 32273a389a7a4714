// isac_cli: scenario-driven front end for the sensing/communication pipelines.
//
//   isac_cli <grid|simulate|range|doppler|disambiguate|pareto|repro> --config <path> --out <dir>
//
// Exit status: 0 ok, 1 config validation failure, 2 runtime failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "isac/alloc.hpp"
#include "isac/channel.hpp"
#include "isac/disambig.hpp"
#include "isac/estimator.hpp"
#include "isac/export.hpp"
#include "isac/grid.hpp"
#include "isac/scenario.hpp"

namespace fs = std::filesystem;
using namespace isac;

namespace {

struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> m_a;
    std::optional<std::size_t> peaks;
};

std::ofstream open_out(const fs::path& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    return os;
}

void write_json(const fs::path& path, const nlohmann::ordered_json& j) {
    auto os = open_out(path);
    os << j.dump(2) << '\n';
}

Scenario load(const fs::path& config, const Overrides& ov) {
    Scenario s = load_scenario(config);
    if (ov.seed && s.channel) s.channel->noise_seed = *ov.seed;
    if (ov.m_a) {
        if (*ov.m_a == 0) throw ConfigError("--ma", "must be >= 1");
        s.estimation.m_a = *ov.m_a;
    }
    if (ov.peaks) {
        if (*ov.peaks == 0) throw ConfigError("--peaks", "must be >= 1");
        s.estimation.k_peaks = *ov.peaks;
    }
    return s;
}

struct Capture {
    ResourceGrid grid;
    ComplexGrid received;
};

Capture simulate(const Scenario& s) {
    const auto& num = s.require_numerology();
    const auto& layout = s.require_layout();
    const auto& ch = s.require_channel();
    auto grid = build_grid(num, layout);
    auto y = apply_channel(grid, ch);
    return {std::move(grid), std::move(y)};
}

void run_grid(const Scenario& s, const fs::path& out) {
    const auto grid = build_grid(s.require_numerology(), s.require_layout());
    auto os = open_out(out / "grid.csv");
    io::write_grid_csv(os, grid);
}

void run_simulate(const Scenario& s, const fs::path& out) {
    const auto cap = simulate(s);
    {
        auto os = open_out(out / "grid.csv");
        io::write_grid_csv(os, cap.grid);
    }
    auto os = open_out(out / "received.csv");
    io::write_received_csv(os, cap.received, cap.grid);
}

// PRS part of the capture, or every occupied RE when there is no PRS.
DivGrid sensing_div(const Scenario& s, const Capture& cap) {
    if (s.require_layout().prs) return pointwise_divide(cap.received, cap.grid, ReKind::Prs);
    return pointwise_divide(cap.received, cap.grid);
}

// A PRS comb decimates every column, so the range axis repeats every c / (comb * scs).
void note_range_aliasing(const Scenario& s, Estimates& est) {
    const auto& prs = s.require_layout().prs;
    if (!prs || prs->comb_size < 2) return;
    const double period = max_range(s.require_numerology()) / prs->comb_size;
    est.warnings.push_back("range axis aliases every " + io::format_double(period) + " m (PRS comb " +
                           std::to_string(prs->comb_size) + ")");
}

void run_range(const Scenario& s, const fs::path& out) {
    const auto cap = simulate(s);
    const auto prof = range_profile(sensing_div(s, cap), s.estimation.m_a);
    auto est = estimate_range(prof, s.estimation.k_peaks, std::max<std::size_t>(1, s.estimation.guard_bins));
    note_range_aliasing(s, est);
    auto os = open_out(out / "range_profile.csv");
    io::write_profile_csv(os, prof);
    write_json(out / "estimates.json", io::estimates_json(&est, nullptr));
}

void run_doppler(const Scenario& s, const fs::path& out) {
    const auto cap = simulate(s);
    const auto prof = doppler_profile(sensing_div(s, cap), s.estimation.n_a);
    const auto est = estimate_doppler(prof, s.estimation.k_peaks, std::max<std::size_t>(1, s.estimation.guard_bins));
    auto os = open_out(out / "doppler_profile.csv");
    io::write_profile_csv(os, prof);
    write_json(out / "estimates.json", io::estimates_json(nullptr, &est));
}

void run_disambiguate(const Scenario& s, const fs::path& out) {
    const auto& layout = s.require_layout();
    if (!layout.prs) throw ConfigError("layout.prs", "missing required field");
    if (!layout.pdsch) throw ConfigError("layout.pdsch", "missing required field");
    const auto cap = simulate(s);

    disambig::Options opts;
    opts.mode = s.estimation.dmrs_row_mode;
    opts.guard = s.estimation.guard_bins;
    const auto r = disambig::disambiguate_doppler(cap.received, cap.grid, layout, s.estimation.k_peaks, opts);

    for (std::size_t i = 0; i < r.rows.offsets.size(); ++i) {
        auto os = open_out(out / ("combined_mprime_" + std::to_string(r.rows.offsets[i]) + ".csv"));
        io::write_doppler_csv(os, r.rows.spectra[i], r.bin_width_hz);
    }
    {
        auto os = open_out(out / "product_spectrum.csv");
        io::write_doppler_csv(os, r.product, r.bin_width_hz);
    }
    {
        auto os = open_out(out / "prs_only_spectrum.csv");
        io::write_profile_csv(os, r.prs_only);
    }

    Estimates dop;
    for (const auto& p : r.peaks.peaks) {
        dop.bins.push_back(p.bin);
        dop.magnitudes.push_back(p.magnitude);
    }
    dop.values = r.dopplers_hz;
    if (r.peaks.incomplete) dop.warnings.push_back("fewer qualifying peaks than requested");

    // Range from the PRS part of the same capture.
    const auto rp = range_profile(pointwise_divide(cap.received, cap.grid, ReKind::Prs), s.estimation.m_a);
    auto rng = estimate_range(rp, s.estimation.k_peaks);
    note_range_aliasing(s, rng);
    {
        auto os = open_out(out / "range_profile.csv");
        io::write_profile_csv(os, rp);
    }
    write_json(out / "estimates.json", io::estimates_json(&rng, &dop));
}

void run_pareto(const Scenario& s, const fs::path& out) {
    const auto& a = s.require_allocation();
    const auto sol = alloc::solve(a.problem);
    if (a.problem.k == 1) {
        const auto surface = alloc::objective_surface(a.problem);
        auto os = open_out(out / "surface.csv");
        io::write_surface_csv(os, surface);
    }
    nlohmann::ordered_json j;
    if (a.problem.k == 1) {
        j["prs_prbs"] = sol.m[1];
        j["prs_slots"] = sol.n[1];
    }
    j["pdsch_prbs"] = sol.comm_prbs();
    j["pdsch_slots"] = sol.comm_slots();
    j["sensing_prbs"] = std::vector<std::size_t>(sol.m.begin() + 1, sol.m.end());
    j["sensing_slots"] = std::vector<std::size_t>(sol.n.begin() + 1, sol.n.end());
    j["F"] = sol.f_value;
    j["r0_bits_per_prb_slot"] = a.problem.r0_bits;
    j["pdsch_bits"] = a.problem.r0_bits * static_cast<double>(sol.comm_prbs() * sol.comm_slots());
    write_json(out / "solution.json", j);
}

void run_repro(const fs::path& config_dir, const fs::path& out, const Overrides& ov) {
    const std::pair<const char*, void (*)(const Scenario&, const fs::path&)> jobs[] = {
        {"fig4_comb4", run_disambiguate},
        {"fig5_comb12", run_disambiguate},
        {"fig6_pareto", run_pareto},
    };
    for (const auto& [name, fn] : jobs) {
        const auto dir = out / name;
        fs::create_directories(dir);
        fn(load(config_dir / (std::string(name) + ".json"), ov), dir);
        std::cout << "repro: wrote " << dir.string() << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"OFDM sensing/communication simulator"};
    app.require_subcommand(1);

    std::string config;
    std::string out = ".";
    Overrides ov;
    std::uint64_t seed = 0;
    std::size_t ma = 0;
    std::size_t peaks = 0;

    auto add_common = [&](CLI::App* sub, bool config_required) {
        auto* opt = sub->add_option("--config", config, "scenario JSON (repro: directory of bundled configs)");
        if (config_required) opt->required();
        sub->add_option("--out", out, "output directory")->capture_default_str();
        sub->add_option("--seed", seed, "override channel.noise_seed");
        sub->add_option("--ma", ma, "override estimation.m_a");
        sub->add_option("--peaks", peaks, "override estimation.k_peaks");
    };

    const std::pair<const char*, void (*)(const Scenario&, const fs::path&)> commands[] = {
        {"grid", run_grid},         {"simulate", run_simulate},         {"range", run_range},
        {"doppler", run_doppler},   {"disambiguate", run_disambiguate}, {"pareto", run_pareto},
    };
    for (const auto& [name, fn] : commands) add_common(app.add_subcommand(name, std::string(name) + " pipeline"), true);
    auto* repro = app.add_subcommand("repro", "run the bundled fig4/fig5/fig6 scenarios");
    add_common(repro, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    for (auto* sub : app.get_subcommands()) {
        if (sub->count("--seed")) ov.seed = seed;
        if (sub->count("--ma")) ov.m_a = ma;
        if (sub->count("--peaks")) ov.peaks = peaks;
    }

    try {
        fs::create_directories(out);
        if (repro->parsed()) {
            run_repro(config.empty() ? fs::path(ISAC_CONFIG_DIR) : fs::path(config), out, ov);
            return 0;
        }
        for (const auto& [name, fn] : commands) {
            if (app.got_subcommand(name)) fn(load(config, ov), out);
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
