// correlations.hpp — Quantum-correlation measures on one- and two-qubit reduced states:
// linear entropy, von Neumann entropy, Wootters concurrence, quantum discord with
// measurement minimization, the 3-tangle, and the Bell correlation function M(rho).
// All entropies are in bits.

#pragma once

#include "ktop/spin.hpp"

#include <Eigen/Dense>

namespace ktop::corr {

using linalg::Matrix;
using spin::SymmetricState;

// Bloch angles of a rank-1 projective measurement on one qubit.
struct MeasurementDirection {
    double theta = 0.0;
    double phi = 0.0;

    Eigen::Vector3d unit() const;
};

// 1 - Tr(rho^2); in [0, 1/2] for a qubit.
double linear_entropy(const Matrix& rho);

// -sum lambda log2 lambda, with 0 log 0 = 0.
double von_neumann_entropy(const Matrix& rho);

// Wootters concurrence of a two-qubit density matrix (Eq. with the
// spin-flipped rho~ = (sy ⊗ sy) rho* (sy ⊗ sy)).
double concurrence(const Matrix& rho);

// Real 3x3 correlation matrix t_ij = Tr(sigma_i ⊗ sigma_j rho).
Eigen::Matrix3d correlation_matrix(const Matrix& rho);

// Sum of the two largest eigenvalues of t·t^T. 0 for the maximally mixed
// state, 1 for pure product states, 2 for maximally entangled ones; > 1 iff
// some measurement setting violates the CHSH inequality.
double bell_m(const Matrix& rho);

// |<Q⊗S + R⊗S + R⊗T - Q⊗T>| with the fixed settings Q = sz, R = sx,
// S = -(sz + sx)/sqrt(2), T = (sz - sx)/sqrt(2); 2*sqrt(2) on the singlet.
double chsh_fixed_settings(const Matrix& rho);

// Genuine tripartite entanglement of a pure symmetric 3-qubit state:
// 2(1 - Tr rho_1^2) - 2 C^2, clipped to [0, 1].
double three_tangle(const SymmetricState& state);
double three_tangle_from(double one_qubit_purity, double pair_concurrence);

struct DiscordOptions {
    int grid_theta = 32;          // hemisphere grid, theta_m in [0, pi/2]
    int grid_phi = 32;            // phi_m in [-pi, pi)
    double refine_tol = 1e-12;    // objective spread at which refinement stops
    int max_refine_evals = 500;   // refinement budget; exceeded -> unconverged flag
};

struct DiscordResult {
    double value = 0.0;                // bits, >= 0
    bool converged = true;             // false when the refinement budget ran out
    MeasurementDirection measurement;  // minimizing direction found
};

// D(A:B) = H(B) - H(A,B) + min over rank-1 projective measurements on B of
// the conditional entropy of A. Deterministic grid-then-refine minimizer.
DiscordResult quantum_discord(const Matrix& rho, const DiscordOptions& opts = {});

} // namespace ktop::corr
