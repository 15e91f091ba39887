// spin.cpp — Collective operators, rotations, and coherent states in the Dicke basis

#include "ktop/spin.hpp"

#include <cmath>
#include <stdexcept>

namespace ktop::spin {

using linalg::Complex;
using linalg::kI;

SpinBasis::SpinBasis(int two_j) : two_j_(two_j) {
    if (two_j < 1) {
        throw std::invalid_argument("SpinBasis: 2j must be a positive integer");
    }
}

SpinBasis SpinBasis::from_j(double j) {
    const double two_j = 2.0 * j;
    const double rounded = std::round(two_j);
    if (!std::isfinite(two_j) || std::abs(two_j - rounded) > 1e-9 || rounded < 1.0) {
        throw std::invalid_argument("SpinBasis: j must be a positive half-integer");
    }
    return SpinBasis(static_cast<int>(rounded));
}

Eigen::Vector3d BlochDirection::unit() const {
    return {std::sin(theta) * std::cos(phi),
            std::sin(theta) * std::sin(phi),
            std::cos(theta)};
}

CollectiveOperators collective_operators(const SpinBasis& basis) {
    const int dim = basis.dim();
    const double j = basis.j();

    Matrix jz = Matrix::Zero(dim, dim);
    Matrix jplus = Matrix::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) {
        const double m = basis.m_of(k);
        jz(k, k) = m;
        // J+ |j,m> = sqrt(j(j+1) - m(m+1)) |j,m+1>; index k-1 holds m+1
        if (k > 0) {
            jplus(k - 1, k) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
        }
    }
    const Matrix jminus = jplus.adjoint();
    Matrix jx = 0.5 * (jplus + jminus);
    Matrix jy = (jplus - jminus) / (2.0 * kI);
    return CollectiveOperators{basis, std::move(jx), std::move(jy), std::move(jz)};
}

Matrix rotation_operator(const SpinBasis& basis, const BlochDirection& dir) {
    const CollectiveOperators ops = collective_operators(basis);
    const Matrix generator = ops.jx * std::sin(dir.phi) - ops.jy * std::cos(dir.phi);
    return linalg::hermitian_expm(generator, kI * dir.theta);
}

SymmetricState coherent_state(const SpinBasis& basis, const BlochDirection& dir) {
    Vector north = Vector::Zero(basis.dim());
    north[0] = 1.0;
    Vector amplitudes = rotation_operator(basis, dir) * north;
    amplitudes.normalize();
    return SymmetricState{basis, std::move(amplitudes)};
}

Eigen::Vector3d bloch_expectation(const SymmetricState& state) {
    return bloch_expectation(state, collective_operators(state.basis));
}

Eigen::Vector3d bloch_expectation(const SymmetricState& state, const CollectiveOperators& ops) {
    if (state.amplitudes.size() != state.basis.dim() || !(state.basis == ops.basis)) {
        throw std::invalid_argument("bloch_expectation: basis/state dimension mismatch");
    }
    const Vector& psi = state.amplitudes;
    const double j = state.basis.j();
    const double ex = (psi.adjoint() * (ops.jx * psi)).value().real();
    const double ey = (psi.adjoint() * (ops.jy * psi)).value().real();
    const double ez = (psi.adjoint() * (ops.jz * psi)).value().real();
    return Eigen::Vector3d(ex, ey, ez) / j;
}

} // namespace ktop::spin
