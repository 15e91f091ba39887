// verify.cpp — Self-check suite implementation

#include "ktop/verify.hpp"

#include "ktop/correlations.hpp"
#include "ktop/kicked_top.hpp"
#include "ktop/pauli.hpp"
#include "ktop/reductions.hpp"
#include "ktop/version.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace ktop::verify {

using linalg::Complex;
using spin::BlochDirection;
using spin::SpinBasis;
using spin::SymmetricState;

namespace {

constexpr double kPi = std::numbers::pi;

CheckResult below(std::string name, double value, double threshold) {
    return CheckResult{std::move(name), value < threshold, value, threshold, true};
}

CheckResult above(std::string name, double value, double threshold) {
    return CheckResult{std::move(name), value > threshold, value, threshold, false};
}

void apply_single_qubit_gate(Vector& state, int qubits, int qubit, const Eigen::Matrix2cd& gate) {
    const std::size_t dim = std::size_t{1} << qubits;
    const std::size_t stride = std::size_t{1} << (qubits - 1 - qubit);
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & stride) continue;
        const Complex a0 = state[static_cast<Eigen::Index>(base)];
        const Complex a1 = state[static_cast<Eigen::Index>(base | stride)];
        state[static_cast<Eigen::Index>(base)] = gate(0, 0) * a0 + gate(0, 1) * a1;
        state[static_cast<Eigen::Index>(base | stride)] = gate(1, 0) * a0 + gate(1, 1) * a1;
    }
}

SymmetricState symmetric_state_from(const SpinBasis& basis, Vector amplitudes) {
    amplitudes.normalize();
    return SymmetricState{basis, std::move(amplitudes)};
}

std::vector<BlochDirection> fixed_directions() {
    std::vector<BlochDirection> dirs;
    for (int i = 1; i <= 4; ++i) {
        for (int k = 0; k < 4; ++k) {
            dirs.push_back(BlochDirection{kPi * i / 5.0, -kPi + 2.0 * kPi * (k + 0.37) / 4.0});
        }
    }
    dirs.push_back(BlochDirection{0.0, 0.0});
    dirs.push_back(BlochDirection{kPi, 1.0});
    return dirs;
}

CheckResult check_floquet_unitarity() {
    double worst = 0.0;
    for (const int two_j : {3, 40}) {
        for (const double kappa : {0.5, 2.5}) {
            const SpinBasis basis(two_j);
            const Matrix u = top::build_floquet({basis, kappa, kPi / 2.0});
            const Matrix residual =
                u.adjoint() * u - Matrix::Identity(basis.dim(), basis.dim());
            worst = std::max(worst, linalg::max_abs(residual));
        }
    }
    return below("floquet_unitarity", worst, 1e-10);
}

CheckResult check_coherent_contract() {
    double worst = 0.0;
    for (const int two_j : {3, 40}) {
        const SpinBasis basis(two_j);
        for (const BlochDirection& dir : fixed_directions()) {
            const Eigen::Vector3d bloch = spin::bloch_expectation(spin::coherent_state(basis, dir));
            worst = std::max(worst, (bloch - dir.unit()).norm());
        }
    }
    return below("coherent_state_contract", worst, 1e-10);
}

// Symmetric-subspace RDMs vs the full 8-dimensional tensor evolution from |000>.
CheckResult check_rdm_oracle_dynamics() {
    const SpinBasis basis(3);
    const double kappa = 2.5;
    const double p = kPi / 2.0;
    const rdm::SymmetricReducer reducer(basis);
    const Matrix u = top::build_floquet({basis, kappa, p});

    SymmetricState state = spin::coherent_state(basis, BlochDirection{0.0, 0.0});
    Vector full = full_coherent_state(3, 0.0, 0.0);

    double worst = 0.0;
    for (int kick = 1; kick <= 20; ++kick) {
        top::apply_kick(u, state.amplitudes);
        full_apply_kick(full, 3, kappa, p);
        const Matrix rho1_diff = reducer.one_qubit(state) - rdm::partial_trace(full, 3, {0});
        const Matrix rho12_diff = reducer.two_qubit(state) - rdm::partial_trace(full, 3, {0, 1});
        worst = std::max({worst, linalg::max_abs(rho1_diff), linalg::max_abs(rho12_diff)});
    }
    return below("rdm_oracle_dynamics", worst, 1e-10);
}

// Collective-moment RDM formulas vs embed + partial trace on random states.
CheckResult check_rdm_oracle_random(int max_two_j, int states_per_basis) {
    std::mt19937_64 rng(20240901);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double worst = 0.0;
    for (int two_j = 1; two_j <= max_two_j; ++two_j) {
        const SpinBasis basis(two_j);
        const rdm::SymmetricReducer reducer(basis);
        for (int s = 0; s < states_per_basis; ++s) {
            Vector amplitudes(basis.dim());
            for (int k = 0; k < basis.dim(); ++k) {
                amplitudes[k] = Complex(gauss(rng), gauss(rng));
            }
            const SymmetricState state = symmetric_state_from(basis, std::move(amplitudes));
            const Vector full = rdm::symmetric_embed(state);
            const Matrix rho1_diff =
                reducer.one_qubit(state) - rdm::partial_trace(full, two_j, {0});
            worst = std::max(worst, linalg::max_abs(rho1_diff));
            if (two_j >= 2) {
                const Matrix rho12_diff =
                    reducer.two_qubit(state) - rdm::partial_trace(full, two_j, {0, 1});
                worst = std::max(worst, linalg::max_abs(rho12_diff));
            }
        }
    }
    return below("rdm_oracle_random", worst, 1e-10);
}

CheckResult check_measure_sanity() {
    const SpinBasis three(3);
    double worst = 0.0;

    Vector bell_vec = Vector::Zero(4);
    bell_vec[0] = bell_vec[3] = 1.0 / std::numbers::sqrt2;
    const Matrix bell = bell_vec * bell_vec.adjoint();
    worst = std::max(worst, std::abs(corr::concurrence(bell) - 1.0));
    worst = std::max(worst, std::abs(corr::bell_m(bell) - 2.0));

    const Matrix mixed = 0.25 * Matrix::Identity(4, 4);
    worst = std::max(worst, std::abs(corr::bell_m(mixed)));

    Vector product_vec = Vector::Zero(4);
    product_vec[0] = 1.0;
    const Matrix product = product_vec * product_vec.adjoint();
    worst = std::max(worst, std::abs(corr::bell_m(product) - 1.0));
    worst = std::max(worst, corr::concurrence(product));

    Vector ghz = Vector::Zero(4);
    ghz[0] = ghz[3] = 1.0 / std::numbers::sqrt2;
    worst = std::max(worst, std::abs(corr::three_tangle({three, ghz}) - 1.0));

    Vector w = Vector::Zero(4);
    w[1] = 1.0;
    const SymmetricState w_state{three, w};
    worst = std::max(worst, std::abs(corr::three_tangle(w_state)));
    worst = std::max(worst,
                     std::abs(corr::concurrence(rdm::two_qubit_rdm(w_state)) - 2.0 / 3.0));

    // the discord optimizer carries its own looser tolerance
    const double discord_dev = std::abs(corr::quantum_discord(bell).value - 1.0);
    worst = std::max(worst, discord_dev > 1e-6 ? discord_dev : 0.0);

    return below("measure_sanity", worst, 1e-9);
}

CheckResult check_classical_correspondence(bool flip_twist) {
    const SpinBasis basis(400);  // j = 200
    const double kappa = 0.5;
    const double p = kPi / 2.0;
    const BlochDirection start{0.8, 0.6};

    SymmetricState state = spin::coherent_state(basis, start);
    const Matrix u = top::build_floquet({basis, kappa, p});
    top::apply_kick(u, state.amplitudes);
    const Eigen::Vector3d quantum = spin::bloch_expectation(state);

    const double kappa_used = flip_twist ? -kappa : kappa;
    const top::ClassicalPoint classical =
        top::classical_step(top::classical_point(start), kappa_used, p);
    const double distance =
        (quantum - Eigen::Vector3d(classical.x, classical.y, classical.z)).norm();
    if (flip_twist) {
        return above("twist_sign_sensitivity", distance, 0.05);
    }
    return below("classical_correspondence", distance, 0.05);
}

// Dense measurement scan computed through explicit projectors and partial
// traces; a second, slower route than the optimizer's closed form.
double dense_discord(const Matrix& rho, int grid) {
    const Matrix id2 = pauli::id();
    const double hb = corr::von_neumann_entropy(linalg::psd_project(rdm::partial_trace(rho, 2, {1})));
    const double hab = corr::von_neumann_entropy(linalg::psd_project(rho));

    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid; ++i) {
        const double theta = (i + 0.5) * (kPi / 2.0) / grid;
        for (int k = 0; k < grid; ++k) {
            const double phi = -kPi + (k + 0.5) * (2.0 * kPi / grid);
            const Eigen::Vector3d n{std::sin(theta) * std::cos(phi),
                                    std::sin(theta) * std::sin(phi), std::cos(theta)};
            double conditional = 0.0;
            for (const double sign : {+1.0, -1.0}) {
                const Matrix projector = 0.5 * (id2 + sign * pauli::dot_sigma(n));
                const Matrix op = pauli::kron(id2, projector);
                const Matrix post = op * rho * op;
                const double prob = post.trace().real();
                if (prob < 1e-14) continue;
                const Matrix rho_a = rdm::partial_trace(Matrix(post / prob), 2, {0});
                conditional += prob * corr::von_neumann_entropy(linalg::psd_project(rho_a));
            }
            best = std::min(best, conditional);
        }
    }
    return std::max(0.0, hb - hab + best);
}

CheckResult check_discord_grid() {
    std::mt19937_64 rng(77001);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double worst = 0.0;
    for (int s = 0; s < 5; ++s) {
        Matrix g(4, 4);
        for (Eigen::Index r = 0; r < 4; ++r) {
            for (Eigen::Index c = 0; c < 4; ++c) {
                g(r, c) = Complex(gauss(rng), gauss(rng));
            }
        }
        Matrix rho = g * g.adjoint();
        rho /= rho.trace().real();
        const double optimized = corr::quantum_discord(rho).value;
        const double dense = dense_discord(rho, 256);
        worst = std::max(worst, std::abs(optimized - dense));
    }
    return below("discord_grid_check", worst, 1e-4);
}

} // namespace

Vector full_coherent_state(int qubits, double theta, double phi) {
    const std::size_t dim = std::size_t{1} << qubits;
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    const Complex excited = s * std::exp(Complex(0.0, phi));
    Vector state(static_cast<Eigen::Index>(dim));
    for (std::size_t bits = 0; bits < dim; ++bits) {
        const int ones = std::popcount(bits);
        Complex amp = std::pow(Complex(c, 0.0), qubits - ones);
        for (int i = 0; i < ones; ++i) amp *= excited;
        state[static_cast<Eigen::Index>(bits)] = amp;
    }
    state.normalize();
    return state;
}

void full_apply_kick(Vector& state, int qubits, double kappa, double p) {
    Eigen::Matrix2cd rotation;
    rotation << std::cos(0.5 * p), -std::sin(0.5 * p),
                std::sin(0.5 * p),  std::cos(0.5 * p);
    for (int q = 0; q < qubits; ++q) {
        apply_single_qubit_gate(state, qubits, q, rotation);
    }
    const std::size_t dim = std::size_t{1} << qubits;
    for (std::size_t bits = 0; bits < dim; ++bits) {
        const double m = 0.5 * (qubits - 2 * std::popcount(bits));
        state[static_cast<Eigen::Index>(bits)] *=
            std::exp(Complex(0.0, -kappa * m * m / qubits));
    }
    state.normalize();
}

std::vector<CheckResult> run_suite(bool full) {
    std::vector<CheckResult> checks;
    checks.push_back(check_floquet_unitarity());
    checks.push_back(check_coherent_contract());
    checks.push_back(check_rdm_oracle_dynamics());
    checks.push_back(check_measure_sanity());
    checks.push_back(check_classical_correspondence(false));
    checks.push_back(check_classical_correspondence(true));
    if (full) {
        checks.push_back(check_rdm_oracle_random(10, 50));
        checks.push_back(check_discord_grid());
    } else {
        checks.push_back(check_rdm_oracle_random(5, 10));
    }
    return checks;
}

bool all_pass(const std::vector<CheckResult>& checks) {
    for (const CheckResult& check : checks) {
        if (!check.pass) return false;
    }
    return true;
}

nlohmann::json report_json(const std::vector<CheckResult>& checks, bool full,
                           double wall_clock_seconds) {
    nlohmann::json items = nlohmann::json::array();
    for (const CheckResult& check : checks) {
        items.push_back({{"name", check.name},
                         {"pass", check.pass},
                         {"value", check.value},
                         {"threshold", check.threshold},
                         {"comparison", check.want_below ? "below" : "above"}});
    }
    return {
        {"suite", full ? "full" : "fast"},
        {"version", std::string(kVersion)},
        {"all_pass", all_pass(checks)},
        {"wall_clock_seconds", wall_clock_seconds},
        {"checks", items},
    };
}

} // namespace ktop::verify
