// ktop.cpp — Command-line surface: time series, phase-map sweeps, classical
// Poincare sections, and the self-check suite.

#include "ktop/output.hpp"
#include "ktop/verify.hpp"
#include "ktop/version.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "CLI11.hpp"

namespace {

using ktop::spin::BlochDirection;
using ktop::spin::SpinBasis;

constexpr double kPi = std::numbers::pi;

// Radians, with "pi", "pi/N", "-pi/N" literals accepted so the default p = pi/2
// carries no decimal rounding.
double parse_angle(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
            s.end());
    double sign = 1.0;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        if (s[0] == '-') sign = -1.0;
        s.erase(0, 1);
    }
    if (s.rfind("pi", 0) == 0) {
        double value = kPi;
        if (s.size() > 2) {
            if (s[2] != '/') throw CLI::ValidationError("angle", "expected pi or pi/<number>");
            const std::string denom = s.substr(3);
            std::size_t used = 0;
            const double d = std::stod(denom, &used);
            if (used != denom.size() || d == 0.0) {
                throw CLI::ValidationError("angle", "bad denominator in pi/<number>");
            }
            value /= d;
        }
        return sign * value;
    }
    std::size_t used = 0;
    const double value = std::stod(s, &used);
    if (used != s.size()) throw CLI::ValidationError("angle", "cannot parse angle: " + text);
    return sign * value;
}

std::pair<int, int> parse_grid(const std::string& text) {
    const auto sep = text.find('x');
    if (sep == std::string::npos) {
        throw CLI::ValidationError("grid", "expected NxM, e.g. 50x50");
    }
    const int n = std::stoi(text.substr(0, sep));
    const int m = std::stoi(text.substr(sep + 1));
    if (n < 1 || m < 1) throw CLI::ValidationError("grid", "grid counts must be positive");
    return {n, m};
}

ktop::survey::MeasureSet parse_measures(const std::string& text, const SpinBasis& basis) {
    if (text == "all") return ktop::survey::default_measures(basis);
    ktop::survey::MeasureSet measures;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        if (token.empty()) continue;
        const auto measure = ktop::survey::measure_from_name(token);
        if (!measure) throw CLI::ValidationError("measures", "unknown measure: " + token);
        measures.insert(*measure);
    }
    if (measures.empty()) throw CLI::ValidationError("measures", "no measures requested");
    return measures;
}

std::string join_args(int argc, char** argv) {
    std::string joined;
    for (int i = 0; i < argc; ++i) {
        if (i) joined += ' ';
        joined += argv[i];
    }
    return joined;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

// ---------------------------------- evolve ----------------------------------

struct EvolveFlags {
    double j = 0.0;
    double kappa = 0.0;
    std::string p = "pi/2";
    double theta = 0.0;
    double phi = 0.0;
    int kicks = 20;
    std::string measures = "all";
    bool include_t0 = false;
    std::string out;
};

int run_evolve(const EvolveFlags& flags, const std::string& command) {
    Timer timer;
    const SpinBasis basis = SpinBasis::from_j(flags.j);
    const double p = parse_angle(flags.p);
    if (flags.theta < 0.0 || flags.theta > kPi) {
        throw CLI::ValidationError("theta", "theta must lie in [0, pi]");
    }
    if (flags.phi < -kPi || flags.phi >= kPi) {
        throw CLI::ValidationError("phi", "phi must lie in [-pi, pi)");
    }
    const ktop::survey::MeasureSet measures = parse_measures(flags.measures, basis);
    const auto records = ktop::survey::time_series({basis, flags.kappa, p},
                                                   BlochDirection{flags.theta, flags.phi},
                                                   flags.kicks, measures, flags.include_t0);
    ktop::io::write_time_series_csv(flags.out, records);

    ktop::io::RunManifest manifest;
    manifest.command = command;
    manifest.parameters = {{"j", flags.j},          {"kappa", flags.kappa},
                           {"p", p},                {"theta", flags.theta},
                           {"phi", flags.phi},      {"kicks", flags.kicks},
                           {"measures", flags.measures}, {"include_t0", flags.include_t0},
                           {"out", flags.out}};
    manifest.add_output(flags.out, "time_series_csv");
    manifest.wall_clock_seconds = timer.seconds();
    ktop::io::write_manifest(flags.out + ".manifest.json", manifest);
    return 0;
}

// ----------------------------------- sweep ----------------------------------

struct SweepFlags {
    double j = 0.0;
    double kappa = 0.0;
    std::string p = "pi/2";
    std::string grid;  // empty = default by measure set
    int kicks = 100;
    std::string measures = "all";
    bool include_t0 = false;
    int threads = 0;
    std::string out_dir;
};

int run_sweep(const SweepFlags& flags, const std::string& command) {
    Timer timer;
    const SpinBasis basis = SpinBasis::from_j(flags.j);
    ktop::survey::SweepConfig config;
    config.params = {basis, flags.kappa, parse_angle(flags.p)};
    config.kicks = flags.kicks;
    config.measures = parse_measures(flags.measures, basis);
    config.include_t0 = flags.include_t0;
    config.threads = flags.threads;
    if (flags.grid.empty()) {
        const bool with_discord = config.measures.count(ktop::survey::Measure::discord) > 0;
        config.n_theta = config.n_phi = with_discord ? 50 : 100;
    } else {
        std::tie(config.n_theta, config.n_phi) = parse_grid(flags.grid);
    }

    const std::filesystem::path dir(flags.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (!std::filesystem::is_directory(dir)) {
        throw CLI::ValidationError("out-dir", "cannot create output directory: " + flags.out_dir);
    }

    const ktop::survey::PhaseMap map = ktop::survey::phase_sweep(config);

    ktop::io::RunManifest manifest;
    manifest.command = command;
    manifest.parameters = {{"j", flags.j},
                           {"kappa", flags.kappa},
                           {"p", config.params.p},
                           {"grid_theta", config.n_theta},
                           {"grid_phi", config.n_phi},
                           {"kicks", flags.kicks},
                           {"measures", flags.measures},
                           {"include_t0", flags.include_t0},
                           {"threads", flags.threads},
                           {"out_dir", flags.out_dir}};
    if (!map.discord_unconverged_cells.empty()) {
        manifest.parameters["discord_unconverged_cells"] = map.discord_unconverged_cells;
    }

    const std::filesystem::path csv = dir / "phase_map.csv";
    ktop::io::write_phase_map_csv(csv, map);
    manifest.add_output(csv, "phase_map_csv");

    for (const auto& [measure, values] : map.values) {
        const std::filesystem::path image =
            dir / (std::string(ktop::survey::measure_name(measure)) + ".pgm");
        const ktop::io::PgmNormalization norm =
            ktop::io::write_pgm(image, config.n_theta, config.n_phi, values);
        manifest.add_output(image, "heatmap_pgm", norm);
    }
    manifest.wall_clock_seconds = timer.seconds();
    ktop::io::write_manifest(dir / "manifest.json", manifest);
    return 0;
}

// --------------------------------- classical --------------------------------

struct ClassicalFlags {
    double kappa = 0.0;
    std::string p = "pi/2";
    std::string seeds = "20x20";
    std::string seed_file;
    int steps = 500;
    std::string out;
};

std::vector<BlochDirection> load_seed_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("seed-file", "cannot open seed file: " + path);
    std::vector<BlochDirection> seeds;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        for (char& c : line) {
            if (c == ',') c = ' ';
        }
        std::istringstream fields(line);
        double theta = 0.0, phi = 0.0;
        if (!(fields >> theta)) {
            std::string rest;
            if (fields.clear(), fields.str().find_first_not_of(" \t\r") == std::string::npos) {
                continue;  // blank line
            }
            throw CLI::ValidationError(
                "seed-file", "malformed line " + std::to_string(line_number) + " in " + path);
        }
        std::string trailing;
        if (!(fields >> phi) || (fields >> trailing)) {
            throw CLI::ValidationError(
                "seed-file", "malformed line " + std::to_string(line_number) + " in " + path);
        }
        seeds.push_back(BlochDirection{theta, phi});
    }
    if (seeds.empty()) throw CLI::ValidationError("seed-file", "seed file is empty: " + path);
    return seeds;
}

// Uniform in (cos theta, phi), cell centers, matching the stroboscopic-map habit.
std::vector<BlochDirection> seed_grid(int n_cos, int n_phi) {
    std::vector<BlochDirection> seeds;
    seeds.reserve(static_cast<std::size_t>(n_cos) * static_cast<std::size_t>(n_phi));
    for (int i = 0; i < n_cos; ++i) {
        const double cos_theta = -1.0 + (i + 0.5) * 2.0 / n_cos;
        for (int k = 0; k < n_phi; ++k) {
            const double phi = -kPi + (k + 0.5) * 2.0 * kPi / n_phi;
            seeds.push_back(BlochDirection{std::acos(cos_theta), phi});
        }
    }
    return seeds;
}

int run_classical(const ClassicalFlags& flags, const std::string& command) {
    Timer timer;
    const double p = parse_angle(flags.p);
    std::vector<BlochDirection> seeds;
    if (!flags.seed_file.empty()) {
        seeds = load_seed_file(flags.seed_file);
    } else {
        const auto [n, m] = parse_grid(flags.seeds);
        seeds = seed_grid(n, m);
    }
    const auto section = ktop::top::poincare_section(flags.kappa, p, seeds, flags.steps);
    ktop::io::write_poincare_csv(flags.out, section);

    ktop::io::RunManifest manifest;
    manifest.command = command;
    manifest.parameters = {{"kappa", flags.kappa}, {"p", p},
                           {"seeds", flags.seeds}, {"seed_file", flags.seed_file},
                           {"steps", flags.steps}, {"out", flags.out}};
    manifest.add_output(flags.out, "poincare_csv");
    manifest.wall_clock_seconds = timer.seconds();
    ktop::io::write_manifest(flags.out + ".manifest.json", manifest);
    return 0;
}

// ---------------------------------- verify ----------------------------------

int run_verify(const std::string& suite, const std::string& out) {
    Timer timer;
    const bool full = suite == "full";
    const auto checks = ktop::verify::run_suite(full);
    const nlohmann::json report = ktop::verify::report_json(checks, full, timer.seconds());
    std::cout << report.dump(2) << '\n';
    if (!out.empty()) {
        std::ofstream file(out);
        if (!file) throw CLI::ValidationError("out", "cannot write report: " + out);
        file << report.dump(2) << '\n';
    }
    return ktop::verify::all_pass(checks) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kicked-top simulator: quantum-correlation dynamics in the "
                 "permutation-symmetric subspace"};
    app.set_version_flag("--version", std::string(ktop::kVersion));
    app.require_subcommand(1);
    const std::string command = join_args(argc, argv);

    EvolveFlags evolve;
    CLI::App* evolve_cmd =
        app.add_subcommand("evolve", "Correlation time series for one initial coherent state");
    evolve_cmd->add_option("--j", evolve.j, "spin quantum number (half-integer)")->required();
    evolve_cmd->add_option("--kappa", evolve.kappa, "twist strength")->required();
    evolve_cmd->add_option("--p", evolve.p, "rotation angle in radians; pi/<n> literals accepted")
        ->capture_default_str();
    evolve_cmd->add_option("--theta", evolve.theta, "initial polar angle in [0, pi]")->required();
    evolve_cmd->add_option("--phi", evolve.phi, "initial azimuth in [-pi, pi)")->required();
    evolve_cmd->add_option("--kicks", evolve.kicks, "number of kicks")->capture_default_str();
    evolve_cmd
        ->add_option("--measures", evolve.measures,
                     "comma list of linear_entropy,von_neumann,concurrence,discord,tangle,bell_m "
                     "or 'all' (tangle requires j = 3/2)")
        ->capture_default_str();
    evolve_cmd->add_flag("--include-t0", evolve.include_t0, "also record the initial state");
    evolve_cmd->add_option("--out", evolve.out, "output CSV path")->required();

    SweepFlags sweep;
    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "Long-time-average phase map over a grid of initial coherent states");
    sweep_cmd->add_option("--j", sweep.j, "spin quantum number (half-integer)")->required();
    sweep_cmd->add_option("--kappa", sweep.kappa, "twist strength")->required();
    sweep_cmd->add_option("--p", sweep.p, "rotation angle in radians; pi/<n> literals accepted")
        ->capture_default_str();
    sweep_cmd->add_option("--grid", sweep.grid,
                          "theta x phi grid, e.g. 50x50 (default 100x100, or 50x50 when "
                          "discord is included)");
    sweep_cmd->add_option("--kicks", sweep.kicks, "kicks averaged per cell")->capture_default_str();
    sweep_cmd->add_option("--measures", sweep.measures, "measures to average (see evolve)")
        ->capture_default_str();
    sweep_cmd->add_flag("--include-t0", sweep.include_t0, "include the initial state in averages");
    sweep_cmd->add_option("--threads", sweep.threads, "worker cap; 0 = hardware concurrency")
        ->capture_default_str();
    sweep_cmd->add_option("--out-dir", sweep.out_dir, "output directory")->required();

    ClassicalFlags classical;
    CLI::App* classical_cmd =
        app.add_subcommand("classical", "Poincare section of the classical kicked-top map");
    classical_cmd->add_option("--kappa", classical.kappa, "twist strength")->required();
    classical_cmd
        ->add_option("--p", classical.p, "rotation angle in radians; pi/<n> literals accepted")
        ->capture_default_str();
    classical_cmd
        ->add_option("--seeds", classical.seeds, "seed grid NxM, uniform in (cos theta, phi)")
        ->capture_default_str();
    classical_cmd->add_option("--seed-file", classical.seed_file,
                              "file of 'theta phi' (or 'theta,phi') lines; overrides --seeds");
    classical_cmd->add_option("--steps", classical.steps, "kicks per seed")->capture_default_str();
    classical_cmd->add_option("--out", classical.out, "output CSV path")->required();

    std::string verify_suite = "fast";
    std::string verify_out;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Run the oracle-equivalence and invariant self-checks");
    verify_cmd->add_option("--suite", verify_suite, "fast or full")
        ->check(CLI::IsMember({"fast", "full"}))
        ->capture_default_str();
    verify_cmd->add_option("--out", verify_out, "also write the JSON report to this path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (evolve_cmd->parsed()) return run_evolve(evolve, command);
        if (sweep_cmd->parsed()) return run_sweep(sweep, command);
        if (classical_cmd->parsed()) return run_classical(classical, command);
        if (verify_cmd->parsed()) return run_verify(verify_suite, verify_out);
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 1;
    }
    return 0;
}
