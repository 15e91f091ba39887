// survey.cpp — Record computation, deterministic parallel sweep, chaos classifier

#include "ktop/survey.hpp"

#include "ktop/reductions.hpp"
#include "ktop/version.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace ktop::survey {

using linalg::Matrix;
using linalg::Vector;
using spin::SymmetricState;

namespace {

constexpr double kPi = std::numbers::pi;

bool wants(const MeasureSet& measures, Measure m) { return measures.count(m) > 0; }

void validate_measures(const SpinBasis& basis, const MeasureSet& measures) {
    if (measures.empty()) {
        throw std::invalid_argument("survey: no measures requested");
    }
    if (wants(measures, Measure::tangle) && basis.two_j() != 3) {
        throw std::invalid_argument("survey: tangle requested but 2j != 3");
    }
}

// Shared read-only tables for one sweep or time series.
struct MeasureContext {
    rdm::SymmetricReducer reducer;
    Matrix floquet;
    MeasureSet measures;
    corr::DiscordOptions discord_opts;

    MeasureContext(const TopParameters& params, const MeasureSet& requested,
                   const corr::DiscordOptions& opts)
        : reducer(params.basis), floquet(top::build_floquet(params)), measures(requested),
          discord_opts(opts) {}
};

CorrelationRecord compute_record(const MeasureContext& ctx, const SymmetricState& state, int kick) {
    CorrelationRecord record;
    record.kick = kick;

    const bool need_one = wants(ctx.measures, Measure::linear_entropy) ||
                          wants(ctx.measures, Measure::von_neumann) ||
                          wants(ctx.measures, Measure::tangle);
    const bool need_two = wants(ctx.measures, Measure::concurrence) ||
                          wants(ctx.measures, Measure::discord) ||
                          wants(ctx.measures, Measure::bell_m) ||
                          wants(ctx.measures, Measure::tangle);

    Matrix rho1, rho12;
    if (need_one) rho1 = linalg::psd_project(ctx.reducer.one_qubit(state));
    if (need_two) rho12 = linalg::psd_project(ctx.reducer.two_qubit(state));

    if (wants(ctx.measures, Measure::linear_entropy)) {
        record.linear_entropy = corr::linear_entropy(rho1);
    }
    if (wants(ctx.measures, Measure::von_neumann)) {
        record.von_neumann = corr::von_neumann_entropy(rho1);
    }
    std::optional<double> pair_concurrence;
    if (wants(ctx.measures, Measure::concurrence) || wants(ctx.measures, Measure::tangle)) {
        pair_concurrence = corr::concurrence(rho12);
    }
    if (wants(ctx.measures, Measure::concurrence)) {
        record.concurrence = pair_concurrence;
    }
    if (wants(ctx.measures, Measure::discord)) {
        const corr::DiscordResult result = corr::quantum_discord(rho12, ctx.discord_opts);
        record.discord = result.value;
        record.discord_converged = result.converged;
    }
    if (wants(ctx.measures, Measure::tangle)) {
        const double purity = (rho1 * rho1).trace().real();
        record.tangle = corr::three_tangle_from(purity, *pair_concurrence);
    }
    if (wants(ctx.measures, Measure::bell_m)) {
        record.bell_m = corr::bell_m(rho12);
    }
    return record;
}

std::vector<CorrelationRecord> run_trajectory(const MeasureContext& ctx, const SpinBasis& basis,
                                              const BlochDirection& dir, int kicks,
                                              bool include_t0) {
    std::vector<CorrelationRecord> records;
    records.reserve(static_cast<std::size_t>(kicks) + (include_t0 ? 1 : 0));
    SymmetricState state = spin::coherent_state(basis, dir);
    if (include_t0) {
        records.push_back(compute_record(ctx, state, 0));
    }
    for (int kick = 1; kick <= kicks; ++kick) {
        top::apply_kick(ctx.floquet, state.amplitudes);
        records.push_back(compute_record(ctx, state, kick));
    }
    return records;
}

} // namespace

std::string_view measure_name(Measure m) {
    switch (m) {
        case Measure::linear_entropy: return "linear_entropy";
        case Measure::von_neumann: return "von_neumann";
        case Measure::concurrence: return "concurrence";
        case Measure::discord: return "discord";
        case Measure::tangle: return "tangle";
        case Measure::bell_m: return "bell_m";
    }
    throw std::logic_error("measure_name: unknown measure");
}

std::optional<Measure> measure_from_name(std::string_view name) {
    for (const Measure m : kAllMeasures) {
        if (measure_name(m) == name) return m;
    }
    return std::nullopt;
}

MeasureSet default_measures(const SpinBasis& basis) {
    MeasureSet measures(kAllMeasures.begin(), kAllMeasures.end());
    if (basis.two_j() != 3) measures.erase(Measure::tangle);
    return measures;
}

std::optional<double> CorrelationRecord::get(Measure m) const {
    switch (m) {
        case Measure::linear_entropy: return linear_entropy;
        case Measure::von_neumann: return von_neumann;
        case Measure::concurrence: return concurrence;
        case Measure::discord: return discord;
        case Measure::tangle: return tangle;
        case Measure::bell_m: return bell_m;
    }
    throw std::logic_error("CorrelationRecord::get: unknown measure");
}

std::vector<CorrelationRecord> time_series(const TopParameters& params, const BlochDirection& dir,
                                           int kicks, const MeasureSet& measures, bool include_t0,
                                           const corr::DiscordOptions& discord_opts) {
    if (kicks < 0) {
        throw std::invalid_argument("time_series: kicks must be >= 0");
    }
    validate_measures(params.basis, measures);
    const MeasureContext ctx(params, measures, discord_opts);
    return run_trajectory(ctx, params.basis, dir, kicks, include_t0);
}

SweepGrid sweep_grid(int n_theta, int n_phi) {
    if (n_theta < 2 || n_phi < 2) {
        throw std::invalid_argument("sweep_grid: grid counts must be >= 2");
    }
    SweepGrid grid;
    grid.theta.resize(static_cast<std::size_t>(n_theta));
    for (int i = 0; i < n_theta; ++i) {
        grid.theta[static_cast<std::size_t>(i)] = kPi * i / (n_theta - 1);
    }
    grid.phi.resize(static_cast<std::size_t>(n_phi));
    for (int k = 0; k < n_phi; ++k) {
        grid.phi[static_cast<std::size_t>(k)] = -kPi + (k + 0.5) * (2.0 * kPi / n_phi);
    }
    return grid;
}

PhaseMap phase_sweep(const SweepConfig& config) {
    if (config.kicks < 1) {
        throw std::invalid_argument("phase_sweep: kicks must be >= 1");
    }
    validate_measures(config.params.basis, config.measures);

    PhaseMap map;
    map.grid = sweep_grid(config.n_theta, config.n_phi);
    map.two_j = config.params.basis.two_j();
    map.kappa = config.params.kappa;
    map.p = config.params.p;
    map.kicks = config.kicks;
    map.include_t0 = config.include_t0;
    map.version = std::string(kVersion);

    const int cells = config.n_theta * config.n_phi;
    for (const Measure m : config.measures) {
        map.values[m].assign(static_cast<std::size_t>(cells), 0.0);
    }
    std::vector<unsigned char> unconverged(static_cast<std::size_t>(cells), 0);

    const MeasureContext ctx(config.params, config.measures, config.discord_opts);
    const double samples =
        static_cast<double>(config.kicks) + (config.include_t0 ? 1.0 : 0.0);

    const auto run_cell = [&](int cell) {
        const int row = cell / config.n_phi;
        const int col = cell % config.n_phi;
        const BlochDirection dir{map.grid.theta[static_cast<std::size_t>(row)],
                                 map.grid.phi[static_cast<std::size_t>(col)]};
        const std::vector<CorrelationRecord> records =
            run_trajectory(ctx, config.params.basis, dir, config.kicks, config.include_t0);
        for (const Measure m : config.measures) {
            double sum = 0.0;
            for (const CorrelationRecord& record : records) {
                sum += *record.get(m);
                if (m == Measure::discord && !record.discord_converged) {
                    unconverged[static_cast<std::size_t>(cell)] = 1;
                }
            }
            map.values[m][static_cast<std::size_t>(cell)] = sum / samples;
        }
    };

    int thread_count = config.threads > 0
                           ? config.threads
                           : static_cast<int>(std::thread::hardware_concurrency());
    if (thread_count < 1) thread_count = 1;
    thread_count = std::min(thread_count, cells);

    if (thread_count == 1) {
        for (int cell = 0; cell < cells; ++cell) run_cell(cell);
    } else {
        std::atomic<int> next{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(thread_count));
        for (int t = 0; t < thread_count; ++t) {
            workers.emplace_back([&] {
                try {
                    for (int cell = next.fetch_add(1); cell < cells; cell = next.fetch_add(1)) {
                        run_cell(cell);
                    }
                } catch (...) {
                    const std::scoped_lock lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            });
        }
        for (std::thread& worker : workers) worker.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    for (int cell = 0; cell < cells; ++cell) {
        if (unconverged[static_cast<std::size_t>(cell)]) {
            map.discord_unconverged_cells.push_back(cell);
        }
    }
    return map;
}

double ChaosMap::chaotic_fraction() const {
    if (labels.empty()) return 0.0;
    std::size_t chaotic = 0;
    for (const CellClass label : labels) {
        if (label == CellClass::chaotic) ++chaotic;
    }
    return static_cast<double>(chaotic) / static_cast<double>(labels.size());
}

ChaosMap classify_classical(double kappa, double p, int n_theta, int n_phi, int steps,
                            double threshold) {
    if (steps < 100) {
        throw std::invalid_argument("classify_classical: steps must be >= 100");
    }
    constexpr double kSeparation = 1e-8;

    ChaosMap map;
    map.grid = sweep_grid(n_theta, n_phi);
    const std::size_t cells = map.grid.theta.size() * map.grid.phi.size();
    map.labels.resize(cells);
    map.growth_rates.resize(cells);

    for (std::size_t row = 0; row < map.grid.theta.size(); ++row) {
        for (std::size_t col = 0; col < map.grid.phi.size(); ++col) {
            const double theta = map.grid.theta[row];
            const double phi = map.grid.phi[col];
            top::ClassicalPoint a = top::classical_point(BlochDirection{theta, phi});
            // deterministic tangent offset; non-degenerate at the poles
            const Eigen::Vector3d tangent(std::cos(theta) * std::cos(phi),
                                          std::cos(theta) * std::sin(phi), -std::sin(theta));
            Eigen::Vector3d b_vec =
                (Eigen::Vector3d(a.x, a.y, a.z) + kSeparation * tangent.normalized()).normalized();
            top::ClassicalPoint b{b_vec.x(), b_vec.y(), b_vec.z()};

            double log_growth = 0.0;
            for (int step = 0; step < steps; ++step) {
                a = top::classical_step(a, kappa, p);
                b = top::classical_step(b, kappa, p);
                const Eigen::Vector3d delta(b.x - a.x, b.y - a.y, b.z - a.z);
                const double distance = delta.norm();
                log_growth += std::log(distance / kSeparation);
                // renormalize the partner to the reference separation
                const Eigen::Vector3d rescaled =
                    (Eigen::Vector3d(a.x, a.y, a.z) + (kSeparation / distance) * delta).normalized();
                b = top::ClassicalPoint{rescaled.x(), rescaled.y(), rescaled.z()};
            }
            const double rate = log_growth / steps;
            const std::size_t cell = row * map.grid.phi.size() + col;
            map.growth_rates[cell] = rate;
            map.labels[cell] = rate > threshold ? CellClass::chaotic : CellClass::regular;
        }
    }
    return map;
}

} // namespace ktop::survey
