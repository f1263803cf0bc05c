#pragma once

#include <cstddef>

#include <Eigen/Core>

#include "cvent/state.hpp"

namespace cvent {

/// One decoherence scenario: a two-mode squeezed system (a1, a2) whose second
/// mode leaks into a thermal environment of mean occupation n_bar, keeping the
/// fraction t_sq of the signal energy.
struct ScenarioParams {
    double s = 1.0;      ///< squeezing parameter, any real
    double n_bar = 0.0;  ///< environment mean thermal occupation, >= 0
    double t_sq = 1.0;   ///< energy transmittivity t^2 in [0, 1]

    /// Throws std::invalid_argument on out-of-range n_bar or t_sq.
    void validate() const;

    /// Covariance of each environment quadrature: 2*n_bar + 1.
    double n_tilde() const { return 2.0 * n_bar + 1.0; }
};

/// Discretization of the environment as a chain of beam splitters.
struct ChainParams {
    std::size_t n_splitters = 100;
};

/// Three-mode model: a single beam splitter of transmittivity t couples a2 to
/// one collective environment mode c0 prepared thermally. Modes a1, a2, c0.
GaussianState collective_evolve(const ScenarioParams& params);

/// Reduced (a1, a2) covariance after the interaction, in closed form:
/// diag blocks cosh(2s)*I and (t^2 cosh(2s) + (1 - t^2) n_tilde)*I, off block
/// t sinh(2s) sigma_z.
GaussianState closed_form_system(const ScenarioParams& params);

/// Closed form of the full three-mode state (a1, a2, c0); equals
/// collective_evolve without constructing the tensor product.
GaussianState closed_form_collective(const ScenarioParams& params);

/// Chain model: a2 passes through n_splitters identical beam splitters, each
/// feeding a fresh thermal mode b0..b{N-1}; the per-splitter amplitude is
/// (t_sq)^(1/(2N)) so the total surviving energy fraction is t_sq.
/// Returns the (2 + N)-mode state (a1, a2, b0, ..., b{N-1}).
GaussianState chain_evolve(const ScenarioParams& params, const ChainParams& chain);

/// Rotates the chain's environment modes into collective coordinates and keeps
/// (a1, a2, c0), where c0 is the one combination the chain couples to. That
/// direction depends on the total transmittivity t_sq the chain was built
/// with; pass the same value here. The result matches collective_evolve up to
/// numerical noise, and the discarded modes are uncorrelated spectators.
GaussianState collective_mode_reduction(const GaussianState& chain_state, double t_sq);

/// Moment equations of the weak-coupling master equation for mode a2,
/// dV/dt = A V + V A^T + D with A = diag(0,0,-1/2,-1/2) * gamma and
/// D = gamma * n_tilde on the a2 block, gamma = 1, integrated by fixed-step
/// RK4 to the horizon tau = -ln(t_sq). Requires t_sq > 0. Returns (a1, a2).
GaussianState fokker_planck_evolve(const ScenarioParams& params, std::size_t steps = 1000);

/// Same integrator from an arbitrary two-mode initial condition for a given
/// horizon; exposed for convergence studies.
GaussianState fokker_planck_from(const GaussianState& initial, double tau, double n_tilde,
                                 std::size_t steps);

/// Purification of the collective model: the thermal mode c0 is replaced by
/// one half of a two-mode squeezed pair (c0, c0p) with cosh(2 s_e) = n_tilde,
/// so the global four-mode state (a1, a2, c0, c0p) is pure.
GaussianState purified_collective_evolve(const ScenarioParams& params);

} // namespace cvent
