// verify.hpp — On-demand self-check suites: oracle equivalence for the symmetric-subspace
// reduction, measure sanity values, Floquet unitarity, and classical-quantum
// correspondence. The full-tensor route here is built from per-qubit gates and
// popcount phases, independent of the Dicke-basis construction it cross-checks.

#pragma once

#include "ktop/linalg.hpp"
#include "ktop/spin.hpp"

#include <string>
#include <vector>

#include "json.hpp"

namespace ktop::verify {

using linalg::Matrix;
using linalg::Vector;

struct CheckResult {
    std::string name;
    bool pass = false;
    double value = 0.0;      // measured quantity
    double threshold = 0.0;  // bound it is compared against
    bool want_below = true;  // pass means value < threshold (or > when false)
};

// fast: unitarity, coherent-state contract, small-j oracle, measure sanity,
// classical correspondence and its twist-sign sensitivity. full adds the
// 2j <= 10 random-state RDM oracle sweep and a dense-grid discord check.
std::vector<CheckResult> run_suite(bool full);

bool all_pass(const std::vector<CheckResult>& checks);

nlohmann::json report_json(const std::vector<CheckResult>& checks, bool full,
                           double wall_clock_seconds);

// --- independent full-tensor helpers (exposed for tests) ---

// Product coherent state of n qubits, amplitudes from cos/sin half-angle factors.
Vector full_coherent_state(int qubits, double theta, double phi);

// One kicked-top period on a 2^n state: per-qubit y-rotation by p, then
// diagonal twist phases exp(-i kappa m(b)^2 / n) with m(b) = (n - 2 popcount)/2.
void full_apply_kick(Vector& state, int qubits, double kappa, double p);

} // namespace ktop::verify
