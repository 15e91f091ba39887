// linalg.cpp — Implementation of the shared dense linear-algebra contracts

#include "ktop/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace ktop::linalg {

namespace {

constexpr double kPsdClip = 1e-9;

void require_square_finite(const Matrix& a, const char* who) {
    if (a.rows() != a.cols() || a.rows() == 0) {
        throw std::invalid_argument(std::string(who) + ": matrix must be square and non-empty");
    }
    if (!a.allFinite()) {
        throw std::invalid_argument(std::string(who) + ": matrix has non-finite entries");
    }
}

} // namespace

double max_abs(const Matrix& a) {
    if (a.size() == 0) return 0.0;
    return a.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& a, double tol) {
    if (a.rows() != a.cols()) return false;
    return max_abs(a - a.adjoint()) < tol;
}

HermitianEigen hermitian_eig(const Matrix& a, double herm_tol) {
    require_square_finite(a, "hermitian_eig");
    if (!is_hermitian(a, herm_tol)) {
        throw std::invalid_argument("hermitian_eig: matrix is not Hermitian within tolerance");
    }
    const Matrix sym = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eig: eigensolver failed to converge");
    }
    return HermitianEigen{solver.eigenvalues(), solver.eigenvectors()};
}

Matrix hermitian_expm(const Matrix& a, Complex scale) {
    if (!std::isfinite(scale.real()) || !std::isfinite(scale.imag())) {
        throw std::invalid_argument("hermitian_expm: scale must be finite");
    }
    const HermitianEigen eig = hermitian_eig(a);
    Vector phases(eig.values.size());
    for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
        phases[i] = std::exp(scale * eig.values[i]);
    }
    return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

Matrix psd_project(const Matrix& rho) {
    require_square_finite(rho, "psd_project");
    if (std::abs(rho.trace().real() - 1.0) > 1e-8 || std::abs(rho.trace().imag()) > 1e-8) {
        throw std::invalid_argument("psd_project: trace must be within 1e-8 of 1");
    }
    HermitianEigen eig = hermitian_eig(rho);
    double total = 0.0;
    for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
        double& lambda = eig.values[i];
        if (lambda < -kPsdClip) {
            throw std::runtime_error("psd_project: eigenvalue below -1e-9, upstream bug");
        }
        if (lambda < 0.0) lambda = 0.0;
        total += lambda;
    }
    if (total <= 0.0) {
        throw std::runtime_error("psd_project: spectrum sums to zero");
    }
    const Eigen::VectorXd renormalized = eig.values / total;
    return eig.vectors * renormalized.asDiagonal().toDenseMatrix().cast<Complex>() *
           eig.vectors.adjoint();
}

} // namespace ktop::linalg
