// pauli.hpp — 2×2 Pauli matrices and the Kronecker helper shared by the qubit-level modules

#pragma once

#include "ktop/linalg.hpp"

#include <array>

namespace ktop::pauli {

using linalg::Complex;
using linalg::Matrix;

inline Matrix id() {
    Matrix m(2, 2);
    m << 1.0, 0.0,
         0.0, 1.0;
    return m;
}

inline Matrix x() {
    Matrix m(2, 2);
    m << 0.0, 1.0,
         1.0, 0.0;
    return m;
}

inline Matrix y() {
    Matrix m(2, 2);
    m << 0.0, Complex(0.0, -1.0),
         Complex(0.0, 1.0), 0.0;
    return m;
}

inline Matrix z() {
    Matrix m(2, 2);
    m << 1.0, 0.0,
         0.0, -1.0;
    return m;
}

// sigma_x, sigma_y, sigma_z in that order
inline std::array<Matrix, 3> xyz() { return {x(), y(), z()}; }

inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
        }
    }
    return out;
}

// n̂·σ for a unit direction
inline Matrix dot_sigma(const Eigen::Vector3d& n) {
    Matrix m(2, 2);
    m << Complex(n.z(), 0.0), Complex(n.x(), -n.y()),
         Complex(n.x(), n.y()), Complex(-n.z(), 0.0);
    return m;
}

} // namespace ktop::pauli
