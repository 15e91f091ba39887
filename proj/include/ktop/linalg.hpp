// linalg.hpp — Dense complex linear algebra: Hermitian eigensolves, exponentials, PSD hygiene
// Every eigendecomposition and matrix-exponential decision of the project lives here.

#pragma once

#include <Eigen/Dense>

#include <complex>

namespace ktop::linalg {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

// Largest absolute entry; the max norm used by all residual checks.
double max_abs(const Matrix& a);

bool is_hermitian(const Matrix& a, double tol);

struct HermitianEigen {
    Eigen::VectorXd values;  // ascending
    Matrix vectors;          // orthonormal columns, same order as values
};

// Eigendecomposition of a Hermitian matrix. The input is symmetrized via
// (A + A†)/2 first; deviations from Hermiticity beyond herm_tol are rejected.
HermitianEigen hermitian_eig(const Matrix& a, double herm_tol = 1e-10);

// V diag(exp(scale·λ)) V†. Unitary whenever scale is purely imaginary.
Matrix hermitian_expm(const Matrix& a, Complex scale);

// Numerical hygiene for density matrices: eigenvalues in [-1e-9, 0) are
// clipped to zero and the spectrum renormalized to unit trace. An eigenvalue
// below -1e-9 signals an upstream bug and throws.
Matrix psd_project(const Matrix& rho);

} // namespace ktop::linalg
