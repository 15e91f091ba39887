// correlations.cpp — Measure implementations and the discord minimizer

#include "ktop/correlations.hpp"

#include "ktop/pauli.hpp"
#include "ktop/reductions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace ktop::corr {

using linalg::Complex;

namespace {

void require_density(const Matrix& rho, Eigen::Index dim, const char* who) {
    if (rho.rows() != dim || rho.cols() != dim) {
        throw std::invalid_argument(std::string(who) + ": unexpected matrix dimension");
    }
    if (!rho.allFinite()) {
        throw std::invalid_argument(std::string(who) + ": non-finite entries");
    }
    if (!linalg::is_hermitian(rho, 1e-8)) {
        throw std::invalid_argument(std::string(who) + ": matrix is not Hermitian");
    }
    if (std::abs(rho.trace().real() - 1.0) > 1e-6) {
        throw std::invalid_argument(std::string(who) + ": trace is not 1");
    }
}

// -p log2 p with the 0 log 0 = 0 convention
double plog2p(double p) {
    if (p <= 0.0) return 0.0;
    return -p * std::log2(p);
}

// Entropy (bits) of a qubit with Bloch radius r
double qubit_entropy_from_radius(double r) {
    r = std::clamp(r, 0.0, 1.0);
    return plog2p(0.5 * (1.0 + r)) + plog2p(0.5 * (1.0 - r));
}

struct BlochDecomposition {
    Eigen::Vector3d a = Eigen::Vector3d::Zero();  // qubit A Bloch vector
    Eigen::Vector3d b = Eigen::Vector3d::Zero();  // qubit B Bloch vector
    Eigen::Matrix3d t = Eigen::Matrix3d::Zero();  // pair correlations
};

const std::array<Matrix, 3>& sigma_ops() {
    static const std::array<Matrix, 3> ops = pauli::xyz();
    return ops;
}

BlochDecomposition bloch_decompose(const Matrix& rho) {
    static const std::array<Matrix, 3> sigma_a = {
        pauli::kron(pauli::x(), pauli::id()),
        pauli::kron(pauli::y(), pauli::id()),
        pauli::kron(pauli::z(), pauli::id()),
    };
    static const std::array<Matrix, 3> sigma_b = {
        pauli::kron(pauli::id(), pauli::x()),
        pauli::kron(pauli::id(), pauli::y()),
        pauli::kron(pauli::id(), pauli::z()),
    };
    BlochDecomposition out;
    for (int i = 0; i < 3; ++i) {
        out.a[i] = (sigma_a[static_cast<std::size_t>(i)] * rho).trace().real();
        out.b[i] = (sigma_b[static_cast<std::size_t>(i)] * rho).trace().real();
    }
    out.t = correlation_matrix(rho);
    return out;
}

// Conditional entropy of A after a projective measurement along n on B.
double conditional_entropy(const BlochDecomposition& d, const Eigen::Vector3d& n) {
    const double q = d.b.dot(n);
    const Eigen::Vector3d tn = d.t * n;
    double value = 0.0;
    for (const double sign : {+1.0, -1.0}) {
        const double prob = 0.5 * (1.0 + sign * q);
        if (prob < 1e-15) continue;
        const Eigen::Vector3d w = d.a + sign * tn;
        const double radius = w.norm() / (2.0 * prob);
        value += prob * qubit_entropy_from_radius(radius);
    }
    return value;
}

Matrix reduce_to_b(const Matrix& rho) {
    Matrix out = Matrix::Zero(2, 2);
    for (Eigen::Index i = 0; i < 2; ++i) {
        for (Eigen::Index j = 0; j < 2; ++j) {
            out(i, j) = rho(i, j) + rho(2 + i, 2 + j);
        }
    }
    return out;
}

struct Simplex2d {
    std::array<Eigen::Vector2d, 3> x;
    std::array<double, 3> f;

    void sort() {
        // keep vertices ordered best to worst
        std::array<int, 3> order = {0, 1, 2};
        std::sort(order.begin(), order.end(), [this](int lhs, int rhs) { return f[static_cast<std::size_t>(lhs)] < f[static_cast<std::size_t>(rhs)]; });
        const auto xs = x;
        const auto fs = f;
        for (int i = 0; i < 3; ++i) {
            x[static_cast<std::size_t>(i)] = xs[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
            f[static_cast<std::size_t>(i)] = fs[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
        }
    }
};

} // namespace

Eigen::Vector3d MeasurementDirection::unit() const {
    return {std::sin(theta) * std::cos(phi),
            std::sin(theta) * std::sin(phi),
            std::cos(theta)};
}

double linear_entropy(const Matrix& rho) {
    require_density(rho, rho.rows(), "linear_entropy");
    return 1.0 - (rho * rho).trace().real();
}

double von_neumann_entropy(const Matrix& rho) {
    require_density(rho, rho.rows(), "von_neumann_entropy");
    const linalg::HermitianEigen eig = linalg::hermitian_eig(rho, 1e-8);
    double entropy = 0.0;
    for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
        const double lambda = eig.values[i];
        if (lambda < -1e-9) {
            throw std::runtime_error("von_neumann_entropy: negative eigenvalue beyond clip tolerance");
        }
        entropy += plog2p(lambda);
    }
    return entropy;
}

double concurrence(const Matrix& rho) {
    require_density(rho, 4, "concurrence");
    static const Matrix flip = pauli::kron(pauli::y(), pauli::y());
    const Matrix rho_tilde = flip * rho.conjugate() * flip;

    linalg::HermitianEigen eig = linalg::hermitian_eig(rho, 1e-8);
    for (Eigen::Index i = 0; i < 4; ++i) {
        eig.values[i] = std::sqrt(std::max(0.0, eig.values[i]));
    }
    const Matrix sqrt_rho =
        eig.vectors * eig.values.asDiagonal().toDenseMatrix().cast<Complex>() * eig.vectors.adjoint();

    // Hermitian and isospectral to rho * rho~, so its eigenvalues are Eq.-ready
    const Matrix m = sqrt_rho * rho_tilde * sqrt_rho;
    const linalg::HermitianEigen meig = linalg::hermitian_eig(m, 1e-8);
    std::array<double, 4> roots{};
    for (Eigen::Index i = 0; i < 4; ++i) {
        double lambda = meig.values[i];
        if (lambda < -1e-10) {
            throw std::runtime_error("concurrence: spin-flip spectrum negative beyond tolerance");
        }
        roots[static_cast<std::size_t>(i)] = std::sqrt(std::max(0.0, lambda));
    }
    // ascending order: roots[3] is the largest
    return std::max(0.0, roots[3] - roots[2] - roots[1] - roots[0]);
}

Eigen::Matrix3d correlation_matrix(const Matrix& rho) {
    static const std::array<Matrix, 9> pair_ops = [] {
        std::array<Matrix, 9> ops;
        const std::array<Matrix, 3> sigma = pauli::xyz();
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                ops[static_cast<std::size_t>(3 * i + j)] =
                    pauli::kron(sigma[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(j)]);
            }
        }
        return ops;
    }();
    Eigen::Matrix3d t;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            t(i, j) = (pair_ops[static_cast<std::size_t>(3 * i + j)] * rho).trace().real();
        }
    }
    return t;
}

double bell_m(const Matrix& rho) {
    require_density(rho, 4, "bell_m");
    const Eigen::Matrix3d t = correlation_matrix(rho);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(t * t.transpose());
    const Eigen::Vector3d h = solver.eigenvalues();  // ascending
    return h[1] + h[2];
}

double chsh_fixed_settings(const Matrix& rho) {
    require_density(rho, 4, "chsh_fixed_settings");
    static const Matrix witness = [] {
        const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
        const Matrix q = pauli::z();
        const Matrix r = pauli::x();
        const Matrix s = -inv_sqrt2 * (pauli::z() + pauli::x());
        const Matrix t = inv_sqrt2 * (pauli::z() - pauli::x());
        return Matrix(pauli::kron(q, s) + pauli::kron(r, s) + pauli::kron(r, t) - pauli::kron(q, t));
    }();
    return std::abs((witness * rho).trace().real());
}

double three_tangle_from(double one_qubit_purity, double pair_concurrence) {
    const double tangle = 2.0 * (1.0 - one_qubit_purity) - 2.0 * pair_concurrence * pair_concurrence;
    if (tangle < -1e-9 || tangle > 1.0 + 1e-9) {
        throw std::runtime_error("three_tangle: value escaped [0, 1] beyond tolerance");
    }
    return std::clamp(tangle, 0.0, 1.0);
}

double three_tangle(const SymmetricState& state) {
    if (state.basis.two_j() != 3) {
        throw std::invalid_argument("three_tangle: defined only for the 3-qubit top (2j = 3)");
    }
    const rdm::SymmetricReducer reducer(state.basis);
    const Matrix rho1 = reducer.one_qubit(state);
    const double purity = (rho1 * rho1).trace().real();
    const double c = concurrence(linalg::psd_project(reducer.two_qubit(state)));
    return three_tangle_from(purity, c);
}

DiscordResult quantum_discord(const Matrix& rho, const DiscordOptions& opts) {
    require_density(rho, 4, "quantum_discord");
    if (opts.grid_theta < 2 || opts.grid_phi < 2) {
        throw std::invalid_argument("quantum_discord: measurement grid must be at least 2x2");
    }

    const double hb = von_neumann_entropy(linalg::psd_project(reduce_to_b(rho)));
    const double hab = von_neumann_entropy(linalg::psd_project(rho));

    const BlochDecomposition decomp = bloch_decompose(rho);
    const auto objective = [&decomp](const Eigen::Vector2d& angles) {
        const MeasurementDirection dir{angles[0], angles[1]};
        return conditional_entropy(decomp, dir.unit());
    };

    // coarse scan of the hemisphere (antipodal directions are equivalent)
    const double dtheta = (std::numbers::pi / 2.0) / opts.grid_theta;
    const double dphi = (2.0 * std::numbers::pi) / opts.grid_phi;
    Eigen::Vector2d best_point(0.0, 0.0);
    double best_value = std::numeric_limits<double>::infinity();
    for (int i = 0; i < opts.grid_theta; ++i) {
        for (int k = 0; k < opts.grid_phi; ++k) {
            const Eigen::Vector2d point((i + 0.5) * dtheta, -std::numbers::pi + (k + 0.5) * dphi);
            const double value = objective(point);
            if (value < best_value) {
                best_value = value;
                best_point = point;
            }
        }
    }

    // Nelder-Mead refinement with a fixed starting simplex
    Simplex2d simplex;
    simplex.x = {best_point,
                 best_point + Eigen::Vector2d(0.5 * dtheta, 0.0),
                 best_point + Eigen::Vector2d(0.0, 0.5 * dphi)};
    int evals = 0;
    for (int i = 0; i < 3; ++i) {
        simplex.f[static_cast<std::size_t>(i)] = objective(simplex.x[static_cast<std::size_t>(i)]);
        ++evals;
    }
    bool converged = false;
    while (evals < opts.max_refine_evals) {
        simplex.sort();
        if (simplex.f[2] - simplex.f[0] < opts.refine_tol) {
            converged = true;
            break;
        }
        const Eigen::Vector2d centroid = 0.5 * (simplex.x[0] + simplex.x[1]);
        const Eigen::Vector2d reflected = centroid + (centroid - simplex.x[2]);
        const double f_reflected = objective(reflected);
        ++evals;
        if (f_reflected < simplex.f[0]) {
            const Eigen::Vector2d expanded = centroid + 2.0 * (centroid - simplex.x[2]);
            const double f_expanded = objective(expanded);
            ++evals;
            if (f_expanded < f_reflected) {
                simplex.x[2] = expanded;
                simplex.f[2] = f_expanded;
            } else {
                simplex.x[2] = reflected;
                simplex.f[2] = f_reflected;
            }
        } else if (f_reflected < simplex.f[1]) {
            simplex.x[2] = reflected;
            simplex.f[2] = f_reflected;
        } else {
            const Eigen::Vector2d contracted = centroid + 0.5 * (simplex.x[2] - centroid);
            const double f_contracted = objective(contracted);
            ++evals;
            if (f_contracted < simplex.f[2]) {
                simplex.x[2] = contracted;
                simplex.f[2] = f_contracted;
            } else {
                for (int i = 1; i < 3; ++i) {
                    simplex.x[static_cast<std::size_t>(i)] =
                        simplex.x[0] + 0.5 * (simplex.x[static_cast<std::size_t>(i)] - simplex.x[0]);
                    simplex.f[static_cast<std::size_t>(i)] = objective(simplex.x[static_cast<std::size_t>(i)]);
                    ++evals;
                }
            }
        }
    }
    simplex.sort();
    if (simplex.f[0] < best_value) {
        best_value = simplex.f[0];
        best_point = simplex.x[0];
    }

    double discord = hb - hab + best_value;
    if (discord < -1e-9) {
        throw std::runtime_error("quantum_discord: negative beyond tolerance, upstream bug");
    }
    discord = std::max(0.0, discord);
    return DiscordResult{discord, converged, MeasurementDirection{best_point[0], best_point[1]}};
}

} // namespace ktop::corr
