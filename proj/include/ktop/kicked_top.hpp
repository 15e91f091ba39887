// kicked_top.hpp — Floquet dynamics of the kicked top and its classical limit map

#pragma once

#include "ktop/spin.hpp"

#include <numbers>
#include <vector>

namespace ktop::top {

using linalg::Matrix;
using linalg::Vector;
using spin::BlochDirection;
using spin::SpinBasis;
using spin::SymmetricState;

struct TopParameters {
    SpinBasis basis;
    double kappa = 0.0;                    // twist strength
    double p = std::numbers::pi / 2.0;     // rotation angle about y
};

// U = exp(-i kappa/(2j) Jz^2) exp(-i p Jy). The rotation acts first on kets;
// the twist factor is diagonal in the Dicke basis with phases exp(-i kappa m^2 / 2j).
Matrix build_floquet(const TopParameters& params);

// One kick applied in place, with a defensive renormalization. evolve and the
// sweep drivers share this so trajectories are bit-identical across callers.
void apply_kick(const Matrix& u, Vector& amplitudes);

// States after 1..kicks applications of u.
std::vector<SymmetricState> evolve(const SymmetricState& state, const Matrix& u, int kicks);

// Point on the classical unit sphere, the large-j limit of <J>/j.
struct ClassicalPoint {
    double x = 0.0;
    double y = 0.0;
    double z = 1.0;

    double norm() const;
};

ClassicalPoint classical_point(const BlochDirection& dir);
BlochDirection to_direction(const ClassicalPoint& pt);

// Rotation about y by p, then twist about z by angle kappa*z; renormalized.
// The sign conventions are pinned by the quantum-correspondence check, not by
// the formulas alone.
ClassicalPoint classical_step(const ClassicalPoint& pt, double kappa, double p);

struct SectionPoint {
    int seed_id = 0;
    int step = 0;
    double theta = 0.0;
    double phi = 0.0;
};

// Stroboscopic classical orbits: for each seed, the visited points at steps
// 0..steps-1 (the seed itself included) as (theta, phi) pairs.
std::vector<SectionPoint> poincare_section(double kappa, double p,
                                           const std::vector<BlochDirection>& seeds, int steps);

} // namespace ktop::top
