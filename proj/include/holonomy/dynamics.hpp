#ifndef HOLONOMY_DYNAMICS_HPP
#define HOLONOMY_DYNAMICS_HPP

#include <cmath>
#include <stdexcept>

#include "holonomy/holonomy.hpp"
#include "holonomy/matrix.hpp"
#include "holonomy/parametrization.hpp"

namespace holonomy {

/// Brute-force adiabatic evolution of one level block around a loop.
struct EvolutionRun {
    SystemSpec system;
    Level level;
    LoopPath loop;
    double total_time = 0.0;
    int steps = 0;
    Matrix final_states;      // dim x d, columns evolved from the level frame
    double dynamical_phase = 0.0;  // integral of E dt = E * T on the block
    double norm_drift = 0.0;
    double leakage = 0.0;     // worst population lost from the level subspace
};

/// Integrates i dpsi/dt = H(p(t/T)) psi with exact midpoint exponentials
/// exp(-i H dt) = U exp(-i H0 dt) U^dagger; unitary by construction, second
/// order in the step. Initial states are the level's frame columns at the
/// loop start.
inline EvolutionRun evolve(const SystemSpec& spec, const Level& level,
                           const LoopPath& loop, double total_time, int steps)
{
    if (steps < 16) throw std::invalid_argument("evolve: too few steps");
    if (!(spec.min_gap() > 1e-12))
        throw std::invalid_argument("evolve: level gap closes (adiabatic limit undefined)");

    const FrameBuilder frames(spec);
    const Matrix h0 = spec.h0();
    const double dt = total_time / steps;
    const double h_norm = h0.diagonal().cwiseAbs().maxCoeff();
    if (h_norm * dt > 0.2)
        throw std::invalid_argument("evolve: step too large for ||H|| (raise steps)");

    // exp(-i H0 dt) once; H0 is diagonal in every supported system.
    const int dim = spec.dim();
    Vector phase(dim);
    for (int i = 0; i < dim; ++i) phase(i) = std::exp(-kI * (h0(i, i).real() * dt));

    const int d = level.dim();
    Matrix psi(dim, d);
    const Matrix u_start = frames.unitary(loop.samples.front());
    for (int c = 0; c < d; ++c)
        psi.col(c) = u_start.col(level.indices[static_cast<std::size_t>(c)]);

    for (int k = 0; k < steps; ++k) {
        const double s_mid = (k + 0.5) / steps;
        const Matrix u = frames.unitary(loop.at(s_mid));
        psi = u * (phase.asDiagonal() * (u.adjoint() * psi));
    }

    EvolutionRun run;
    run.system = spec;
    run.level = level;
    run.loop = loop;
    run.total_time = total_time;
    run.steps = steps;
    run.final_states = psi;
    run.dynamical_phase = level.eigenvalue * total_time;
    for (int c = 0; c < d; ++c)
        run.norm_drift = std::max(run.norm_drift, std::abs(psi.col(c).norm() - 1.0));

    const Matrix u_end = frames.unitary(loop.samples.back());
    for (int c = 0; c < d; ++c) {
        double inside = 0.0;
        for (int i : level.indices)
            inside += std::norm(u_end.col(i).dot(psi.col(c)));
        run.leakage = std::max(run.leakage, 1.0 - inside);
    }
    return run;
}

/// Holonomy estimate extracted from an evolution run: the overlap of the
/// evolved states with the initial frame, dynamical phase removed, then
/// unitarized by polar decomposition.
struct HolonomyEstimate {
    Matrix W;
    double leakage = 0.0;
    double unitarity_defect = 0.0;  // distance of the raw overlap to unitary
};

inline HolonomyEstimate extract_holonomy(const EvolutionRun& run,
                                         double max_leakage = 1e-3)
{
    if (run.leakage > max_leakage)
        throw std::runtime_error("extract_holonomy: leakage too large; raise T");

    const FrameBuilder frames(run.system);
    const Matrix u_start = frames.unitary(run.loop.samples.front());
    const int d = run.level.dim();
    Matrix overlap(d, d);
    const Complex undo_dynamical = std::exp(kI * run.dynamical_phase);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            overlap(r, c) =
                undo_dynamical *
                u_start.col(run.level.indices[static_cast<std::size_t>(r)]).dot(
                    run.final_states.col(c));

    HolonomyEstimate est;
    est.W = polar_unitary(overlap);
    est.leakage = run.leakage;
    est.unitarity_defect = max_abs(est.W - overlap);
    return est;
}

}  // namespace holonomy

#endif
