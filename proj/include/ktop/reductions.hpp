// reductions.hpp — One- and two-qubit reduced density matrices of the symmetric state,
// computed from collective-operator moments, plus the brute-force tensor-embedding
// route used to validate them and for small-j work.

#pragma once

#include "ktop/spin.hpp"

#include <array>
#include <vector>

namespace ktop::rdm {

using linalg::Matrix;
using linalg::Vector;
using spin::SpinBasis;
using spin::SymmetricState;

// Holds the collective operators and symmetrized second moments for one basis,
// so sweeps can share read-only tables across threads.
class SymmetricReducer {
public:
    explicit SymmetricReducer(const SpinBasis& basis);

    // rho_1 = (I + b·sigma)/2 with b = <J>/j; identical for every qubit.
    Matrix one_qubit(const SymmetricState& state) const;

    // rho_12 in the product basis {|00>,|01>,|10>,|11>} from the pair correlators
    // c_ab = (<JaJb + JbJa> - (N/2) d_ab) · 2/(N(N-1)), N = 2j. Requires N >= 2.
    Matrix two_qubit(const SymmetricState& state) const;

    const spin::CollectiveOperators& operators() const { return ops_; }

private:
    SpinBasis basis_;
    spin::CollectiveOperators ops_;
    std::array<Matrix, 9> symmetrized_;  // {Ja Jb + Jb Ja} for a,b in x,y,z (row-major)
};

Matrix single_qubit_rdm(const SymmetricState& state);
Matrix two_qubit_rdm(const SymmetricState& state);

// Dicke amplitudes expanded to the full 2^(2j) product basis: index k (m = j-k)
// maps to the normalized equal superposition of all bitstrings with k ones.
// Qubit 0 is the most significant bit. Limited to 2j <= 14.
Vector symmetric_embed(const SymmetricState& state);

// Partial trace over the complement of `keep` (0-based qubit indices, |keep| in {1,2});
// `keep` order fixes the row/column ordering of the result.
Matrix partial_trace(const Vector& full_state, int qubits, const std::vector<int>& keep);
Matrix partial_trace(const Matrix& full_density, int qubits, const std::vector<int>& keep);

} // namespace ktop::rdm
