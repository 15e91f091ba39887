// spin.hpp — Dicke-basis angular momentum operators and spin coherent states

#pragma once

#include "ktop/linalg.hpp"

#include <Eigen/Dense>

namespace ktop::spin {

using linalg::Matrix;
using linalg::Vector;

// Permutation-symmetric subspace of 2j qubits. Index k in {0,..,2j} addresses
// the Dicke state |j, m> with m = j - k; index 0 is |j, j> (all qubits |0>),
// index 2j is |j, -j>.
class SpinBasis {
public:
    SpinBasis() : two_j_(1) {}  // single qubit, j = 1/2
    explicit SpinBasis(int two_j);
    static SpinBasis from_j(double j);

    int two_j() const { return two_j_; }
    double j() const { return 0.5 * two_j_; }
    int dim() const { return two_j_ + 1; }
    int qubits() const { return two_j_; }
    double m_of(int index) const { return j() - index; }

    bool operator==(const SpinBasis& other) const = default;

private:
    int two_j_;
};

// Direction on the Bloch sphere: theta in [0, pi], phi in [-pi, pi).
struct BlochDirection {
    double theta = 0.0;
    double phi = 0.0;

    Eigen::Vector3d unit() const;
};

// Unit-norm state of the 2j-qubit top restricted to the symmetric subspace.
struct SymmetricState {
    SpinBasis basis;
    Vector amplitudes;  // length basis.dim()
};

struct CollectiveOperators {
    SpinBasis basis;
    Matrix jx, jy, jz;
};

// Jz diagonal with entries m = j..-j; Jx, Jy from the ladder coefficients
// sqrt(j(j+1) - m(m±1)).
CollectiveOperators collective_operators(const SpinBasis& basis);

// R(theta, phi) = exp{ +i theta (Jx sin phi - Jy cos phi) }
Matrix rotation_operator(const SpinBasis& basis, const BlochDirection& dir);

// |theta, phi> = R(theta, phi)|j, j>. phi is irrelevant at the poles.
SymmetricState coherent_state(const SpinBasis& basis, const BlochDirection& dir);

// (<Jx>, <Jy>, <Jz>)/j. For a coherent state this is the unit vector
// (sin t cos p, sin t sin p, cos t), which pins all sign conventions.
Eigen::Vector3d bloch_expectation(const SymmetricState& state);
Eigen::Vector3d bloch_expectation(const SymmetricState& state, const CollectiveOperators& ops);

} // namespace ktop::spin
