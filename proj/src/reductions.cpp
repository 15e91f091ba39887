// reductions.cpp — Collective-moment RDM formulas and the embedding oracle

#include "ktop/reductions.hpp"

#include "ktop/pauli.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace ktop::rdm {

namespace {

void require_state(const SymmetricState& state, const char* who) {
    if (state.amplitudes.size() != state.basis.dim()) {
        throw std::invalid_argument(std::string(who) + ": state/basis dimension mismatch");
    }
    if (std::abs(state.amplitudes.norm() - 1.0) > 1e-8) {
        throw std::invalid_argument(std::string(who) + ": state is not normalized");
    }
}

double expectation(const Vector& psi, const Matrix& op) {
    return (psi.adjoint() * (op * psi)).value().real();
}

double binomial(int n, int k) {
    double value = 1.0;
    for (int i = 1; i <= k; ++i) {
        value *= static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return value;
}

// Scatter the bits of `packed` into the given qubit positions of an N-qubit
// basis index. Qubit q occupies bit (N-1-q); the first listed qubit is the
// most significant bit of `packed`.
std::size_t scatter_bits(std::size_t packed, const std::vector<int>& qubits_list, int n) {
    std::size_t index = 0;
    const std::size_t count = qubits_list.size();
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t bit = (packed >> (count - 1 - i)) & 1u;
        index |= bit << (n - 1 - qubits_list[i]);
    }
    return index;
}

std::vector<int> complement_of(const std::vector<int>& keep, int qubits) {
    std::vector<bool> kept(static_cast<std::size_t>(qubits), false);
    for (int q : keep) {
        if (q < 0 || q >= qubits) {
            throw std::invalid_argument("partial_trace: qubit index out of range");
        }
        if (kept[static_cast<std::size_t>(q)]) {
            throw std::invalid_argument("partial_trace: repeated qubit index");
        }
        kept[static_cast<std::size_t>(q)] = true;
    }
    std::vector<int> complement;
    complement.reserve(static_cast<std::size_t>(qubits) - keep.size());
    for (int q = 0; q < qubits; ++q) {
        if (!kept[static_cast<std::size_t>(q)]) complement.push_back(q);
    }
    return complement;
}

void require_keep(const std::vector<int>& keep) {
    if (keep.size() != 1 && keep.size() != 2) {
        throw std::invalid_argument("partial_trace: keep set must have one or two qubits");
    }
}

} // namespace

SymmetricReducer::SymmetricReducer(const SpinBasis& basis)
    : basis_(basis), ops_(spin::collective_operators(basis)) {
    const std::array<const Matrix*, 3> j_ops = {&ops_.jx, &ops_.jy, &ops_.jz};
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            symmetrized_[static_cast<std::size_t>(3 * a + b)] =
                (*j_ops[a]) * (*j_ops[b]) + (*j_ops[b]) * (*j_ops[a]);
        }
    }
}

Matrix SymmetricReducer::one_qubit(const SymmetricState& state) const {
    require_state(state, "one_qubit");
    const Eigen::Vector3d b = spin::bloch_expectation(state, ops_);
    return 0.5 * (pauli::id() + b.x() * pauli::x() + b.y() * pauli::y() + b.z() * pauli::z());
}

Matrix SymmetricReducer::two_qubit(const SymmetricState& state) const {
    require_state(state, "two_qubit");
    const int n = basis_.qubits();
    if (n < 2) {
        throw std::invalid_argument("two_qubit: needs at least two qubits (2j >= 2)");
    }
    const double dn = static_cast<double>(n);
    const Vector& psi = state.amplitudes;
    const Eigen::Vector3d a = spin::bloch_expectation(state, ops_);

    Eigen::Matrix3d c;
    for (int alpha = 0; alpha < 3; ++alpha) {
        for (int beta = alpha; beta < 3; ++beta) {
            const double sym =
                expectation(psi, symmetrized_[static_cast<std::size_t>(3 * alpha + beta)]);
            const double delta = (alpha == beta) ? dn / 2.0 : 0.0;
            c(alpha, beta) = (sym - delta) * 2.0 / (dn * (dn - 1.0));
            c(beta, alpha) = c(alpha, beta);
        }
    }

    const std::array<Matrix, 3> sigma = pauli::xyz();
    const Matrix id2 = pauli::id();
    Matrix rho = pauli::kron(id2, id2);
    for (int alpha = 0; alpha < 3; ++alpha) {
        rho += a[alpha] * (pauli::kron(sigma[static_cast<std::size_t>(alpha)], id2) +
                           pauli::kron(id2, sigma[static_cast<std::size_t>(alpha)]));
        for (int beta = 0; beta < 3; ++beta) {
            rho += c(alpha, beta) * pauli::kron(sigma[static_cast<std::size_t>(alpha)],
                                                sigma[static_cast<std::size_t>(beta)]);
        }
    }
    return 0.25 * rho;
}

Matrix single_qubit_rdm(const SymmetricState& state) {
    return SymmetricReducer(state.basis).one_qubit(state);
}

Matrix two_qubit_rdm(const SymmetricState& state) {
    return SymmetricReducer(state.basis).two_qubit(state);
}

Vector symmetric_embed(const SymmetricState& state) {
    require_state(state, "symmetric_embed");
    const int n = state.basis.qubits();
    if (n > 14) {
        throw std::invalid_argument("symmetric_embed: 2j > 14 exceeds the oracle scale");
    }
    const std::size_t full_dim = std::size_t{1} << n;
    Vector full = Vector::Zero(static_cast<Eigen::Index>(full_dim));
    for (std::size_t bits = 0; bits < full_dim; ++bits) {
        const int k = std::popcount(bits);
        full[static_cast<Eigen::Index>(bits)] =
            state.amplitudes[k] / std::sqrt(binomial(n, k));
    }
    full.normalize();
    return full;
}

Matrix partial_trace(const Vector& full_state, int qubits, const std::vector<int>& keep) {
    require_keep(keep);
    if (full_state.size() != (Eigen::Index{1} << qubits)) {
        throw std::invalid_argument("partial_trace: state length is not 2^qubits");
    }
    const std::vector<int> rest = complement_of(keep, qubits);
    const std::size_t keep_dim = std::size_t{1} << keep.size();
    const std::size_t rest_dim = std::size_t{1} << rest.size();

    Matrix rho = Matrix::Zero(static_cast<Eigen::Index>(keep_dim),
                              static_cast<Eigen::Index>(keep_dim));
    for (std::size_t r = 0; r < rest_dim; ++r) {
        const std::size_t base = scatter_bits(r, rest, qubits);
        for (std::size_t s = 0; s < keep_dim; ++s) {
            const auto amp_s = full_state[static_cast<Eigen::Index>(base | scatter_bits(s, keep, qubits))];
            for (std::size_t t = 0; t < keep_dim; ++t) {
                const auto amp_t =
                    full_state[static_cast<Eigen::Index>(base | scatter_bits(t, keep, qubits))];
                rho(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t)) +=
                    amp_s * std::conj(amp_t);
            }
        }
    }
    return rho;
}

Matrix partial_trace(const Matrix& full_density, int qubits, const std::vector<int>& keep) {
    require_keep(keep);
    const Eigen::Index full_dim = Eigen::Index{1} << qubits;
    if (full_density.rows() != full_dim || full_density.cols() != full_dim) {
        throw std::invalid_argument("partial_trace: density matrix is not 2^qubits square");
    }
    const std::vector<int> rest = complement_of(keep, qubits);
    const std::size_t keep_dim = std::size_t{1} << keep.size();
    const std::size_t rest_dim = std::size_t{1} << rest.size();

    Matrix rho = Matrix::Zero(static_cast<Eigen::Index>(keep_dim),
                              static_cast<Eigen::Index>(keep_dim));
    for (std::size_t r = 0; r < rest_dim; ++r) {
        const std::size_t base = scatter_bits(r, rest, qubits);
        for (std::size_t s = 0; s < keep_dim; ++s) {
            const std::size_t row = base | scatter_bits(s, keep, qubits);
            for (std::size_t t = 0; t < keep_dim; ++t) {
                const std::size_t col = base | scatter_bits(t, keep, qubits);
                rho(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t)) +=
                    full_density(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
            }
        }
    }
    return rho;
}

} // namespace ktop::rdm
