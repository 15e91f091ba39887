// survey.hpp — Time-series and long-time-average drivers: correlation records per kick,
// phase maps over grids of initial coherent states, and a classical chaos classifier.

#pragma once

#include "ktop/correlations.hpp"
#include "ktop/kicked_top.hpp"

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ktop::survey {

using spin::BlochDirection;
using spin::SpinBasis;
using top::TopParameters;

enum class Measure {
    linear_entropy,
    von_neumann,
    concurrence,
    discord,
    tangle,
    bell_m,
};

inline constexpr std::array<Measure, 6> kAllMeasures = {
    Measure::linear_entropy, Measure::von_neumann, Measure::concurrence,
    Measure::discord,        Measure::tangle,      Measure::bell_m,
};

std::string_view measure_name(Measure m);
std::optional<Measure> measure_from_name(std::string_view name);

// Ordered by enum, which fixes the CSV column order everywhere.
using MeasureSet = std::set<Measure>;

// Every measure valid for the basis (tangle only for the 3-qubit top).
MeasureSet default_measures(const SpinBasis& basis);

// The five measure values (plus metadata) at one kick for one initial state.
struct CorrelationRecord {
    int kick = 0;
    std::optional<double> linear_entropy;
    std::optional<double> von_neumann;
    std::optional<double> concurrence;
    std::optional<double> discord;
    std::optional<double> tangle;
    std::optional<double> bell_m;
    bool discord_converged = true;

    std::optional<double> get(Measure m) const;
};

// Evolves the coherent state at `dir` and records the requested measures at
// kicks 1..kicks (and kick 0 when include_t0).
std::vector<CorrelationRecord> time_series(const TopParameters& params, const BlochDirection& dir,
                                           int kicks, const MeasureSet& measures,
                                           bool include_t0 = false,
                                           const corr::DiscordOptions& discord_opts = {});

// theta rows span [0, pi] endpoint-inclusive so each pole appears exactly once;
// phi columns are cell centers on [-pi, pi) so the seam is not duplicated.
struct SweepGrid {
    std::vector<double> theta;
    std::vector<double> phi;
};
SweepGrid sweep_grid(int n_theta, int n_phi);

struct SweepConfig {
    TopParameters params;
    int n_theta = 100;
    int n_phi = 100;
    int kicks = 100;
    MeasureSet measures;
    bool include_t0 = false;
    int threads = 0;  // 0 = hardware concurrency
    corr::DiscordOptions discord_opts;
};

// Long-time-averaged measure values over the grid of initial coherent states.
struct PhaseMap {
    SweepGrid grid;
    std::map<Measure, std::vector<double>> values;  // row-major [theta][phi]
    std::vector<int> discord_unconverged_cells;     // row-major cell indices
    int two_j = 0;
    double kappa = 0.0;
    double p = 0.0;
    int kicks = 0;
    bool include_t0 = false;
    std::string version;

    int cells() const { return static_cast<int>(grid.theta.size() * grid.phi.size()); }
};

// Cells are independent work units; results are merged by cell index, so the
// output is bit-identical for any thread count.
PhaseMap phase_sweep(const SweepConfig& config);

enum class CellClass { regular, chaotic };

struct ChaosMap {
    SweepGrid grid;
    std::vector<CellClass> labels;      // row-major
    std::vector<double> growth_rates;   // mean log-separation growth per step

    double chaotic_fraction() const;
};

// Two-trajectory separation-growth proxy: initial separation 1e-8, label
// chaotic when the per-step log growth averaged over `steps` exceeds the
// threshold. A test fixture for phase-map contrasts, not a Lyapunov spectrum.
ChaosMap classify_classical(double kappa, double p, int n_theta, int n_phi, int steps,
                            double threshold = 0.1);

} // namespace ktop::survey
