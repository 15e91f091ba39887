// kicked_top.cpp — Floquet operator, stroboscopic evolution, classical map

#include "ktop/kicked_top.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ktop::top {

using linalg::Complex;
using linalg::kI;

Matrix build_floquet(const TopParameters& params) {
    if (!std::isfinite(params.kappa) || !std::isfinite(params.p)) {
        throw std::invalid_argument("build_floquet: kappa and p must be finite");
    }
    const SpinBasis& basis = params.basis;
    const spin::CollectiveOperators ops = spin::collective_operators(basis);
    const Matrix rotation = linalg::hermitian_expm(ops.jy, -kI * params.p);

    Vector twist_phases(basis.dim());
    const double two_j = static_cast<double>(basis.two_j());
    for (int k = 0; k < basis.dim(); ++k) {
        const double m = basis.m_of(k);
        twist_phases[k] = std::exp(-kI * (params.kappa * m * m / two_j));
    }
    return twist_phases.asDiagonal() * rotation;
}

void apply_kick(const Matrix& u, Vector& amplitudes) {
    amplitudes = u * amplitudes;
    const double norm = amplitudes.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw std::runtime_error("apply_kick: state norm collapsed");
    }
    amplitudes /= norm;
}

std::vector<SymmetricState> evolve(const SymmetricState& state, const Matrix& u, int kicks) {
    if (kicks < 0) {
        throw std::invalid_argument("evolve: kicks must be >= 0");
    }
    if (u.rows() != u.cols() || u.rows() != state.amplitudes.size()) {
        throw std::invalid_argument("evolve: dimension mismatch between state and unitary");
    }
    std::vector<SymmetricState> sequence;
    sequence.reserve(static_cast<std::size_t>(kicks));
    Vector psi = state.amplitudes;
    for (int n = 0; n < kicks; ++n) {
        apply_kick(u, psi);
        sequence.push_back(SymmetricState{state.basis, psi});
    }
    return sequence;
}

double ClassicalPoint::norm() const { return std::sqrt(x * x + y * y + z * z); }

ClassicalPoint classical_point(const BlochDirection& dir) {
    const Eigen::Vector3d n = dir.unit();
    return ClassicalPoint{n.x(), n.y(), n.z()};
}

BlochDirection to_direction(const ClassicalPoint& pt) {
    const double z = std::clamp(pt.z, -1.0, 1.0);
    return BlochDirection{std::acos(z), std::atan2(pt.y, pt.x)};
}

ClassicalPoint classical_step(const ClassicalPoint& pt, double kappa, double p) {
    // rotation about y by p
    const double xr = pt.x * std::cos(p) + pt.z * std::sin(p);
    const double yr = pt.y;
    const double zr = -pt.x * std::sin(p) + pt.z * std::cos(p);
    // twist about z by kappa * z
    const double angle = kappa * zr;
    ClassicalPoint out;
    out.x = xr * std::cos(angle) - yr * std::sin(angle);
    out.y = xr * std::sin(angle) + yr * std::cos(angle);
    out.z = zr;
    const double norm = out.norm();
    if (!(norm > 0.0)) {
        throw std::runtime_error("classical_step: degenerate point");
    }
    out.x /= norm;
    out.y /= norm;
    out.z /= norm;
    return out;
}

std::vector<SectionPoint> poincare_section(double kappa, double p,
                                           const std::vector<BlochDirection>& seeds, int steps) {
    if (steps < 1) {
        throw std::invalid_argument("poincare_section: steps must be >= 1");
    }
    std::vector<SectionPoint> section;
    section.reserve(seeds.size() * static_cast<std::size_t>(steps));
    for (std::size_t s = 0; s < seeds.size(); ++s) {
        ClassicalPoint pt = classical_point(seeds[s]);
        for (int step = 0; step < steps; ++step) {
            const BlochDirection dir = to_direction(pt);
            section.push_back(SectionPoint{static_cast<int>(s), step, dir.theta, dir.phi});
            pt = classical_step(pt, kappa, p);
        }
    }
    return section;
}

} // namespace ktop::top
