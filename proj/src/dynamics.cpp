#include "cvent/dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cvent/symplectic.hpp"

namespace cvent {

void ScenarioParams::validate() const {
    if (!std::isfinite(s)) {
        throw std::invalid_argument("squeezing parameter must be finite");
    }
    if (!std::isfinite(n_bar) || n_bar < 0.0) {
        throw std::invalid_argument("n_bar must be a finite value >= 0");
    }
    if (!(t_sq >= 0.0 && t_sq <= 1.0)) {
        throw std::invalid_argument("t_sq must lie in [0, 1]");
    }
}

namespace {

GaussianState initial_collective_state(const ScenarioParams& params) {
    return tensor(relabeled(two_mode_squeezed(params.s), {"a1", "a2"}),
                  relabeled(thermal_state(params.n_tilde()), {"c0"}));
}

} // namespace

GaussianState collective_evolve(const ScenarioParams& params) {
    params.validate();
    return apply(initial_collective_state(params),
                 beam_splitter(std::sqrt(params.t_sq), 1, 2, 3));
}

GaussianState closed_form_system(const ScenarioParams& params) {
    params.validate();
    const double c2s = std::cosh(2.0 * params.s);
    const double s2s = std::sinh(2.0 * params.s);
    const double t = std::sqrt(params.t_sq);
    const double r_sq = 1.0 - params.t_sq;
    Eigen::Matrix4d cov = Eigen::Matrix4d::Zero();
    cov(0, 0) = cov(1, 1) = c2s;
    cov(2, 2) = cov(3, 3) = params.t_sq * c2s + r_sq * params.n_tilde();
    cov(0, 2) = cov(2, 0) = t * s2s;
    cov(1, 3) = cov(3, 1) = -t * s2s;
    return GaussianState({"a1", "a2"}, cov);
}

GaussianState closed_form_collective(const ScenarioParams& params) {
    params.validate();
    const double c2s = std::cosh(2.0 * params.s);
    const double s2s = std::sinh(2.0 * params.s);
    const double nt = params.n_tilde();
    const double t = std::sqrt(params.t_sq);
    const double r = std::sqrt(1.0 - params.t_sq);
    Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(6, 6);
    const Eigen::Matrix2d id = Eigen::Matrix2d::Identity();
    const Eigen::Matrix2d sz = Eigen::Vector2d(1.0, -1.0).asDiagonal();
    cov.block<2, 2>(0, 0) = c2s * id;
    cov.block<2, 2>(2, 2) = (t * t * c2s + r * r * nt) * id;
    cov.block<2, 2>(4, 4) = (r * r * c2s + t * t * nt) * id;
    cov.block<2, 2>(0, 2) = t * s2s * sz;
    cov.block<2, 2>(2, 0) = t * s2s * sz;
    cov.block<2, 2>(0, 4) = r * s2s * sz;
    cov.block<2, 2>(4, 0) = r * s2s * sz;
    cov.block<2, 2>(2, 4) = t * r * (c2s - nt) * id;
    cov.block<2, 2>(4, 2) = t * r * (c2s - nt) * id;
    return GaussianState({"a1", "a2", "c0"}, std::move(cov));
}

GaussianState chain_evolve(const ScenarioParams& params, const ChainParams& chain) {
    params.validate();
    if (chain.n_splitters == 0) {
        throw std::invalid_argument("chain needs at least one splitter");
    }
    const std::size_t n_env = chain.n_splitters;
    // Per-splitter amplitude: N equal splitters must transmit t_sq in energy.
    const double t_amp = std::pow(params.t_sq, 1.0 / (2.0 * static_cast<double>(n_env)));
    const double r_amp = std::sqrt(std::max(0.0, 1.0 - t_amp * t_amp));

    const Eigen::Index dim = static_cast<Eigen::Index>(2 * (2 + n_env));
    Eigen::MatrixXd cov = params.n_tilde() * Eigen::MatrixXd::Identity(dim, dim);
    cov.topLeftCorner<4, 4>() = two_mode_squeezed(params.s).cov();

    const auto mix = [&](Eigen::Index x, Eigen::Index y) {
        const Eigen::RowVectorXd row_x = cov.row(x);
        cov.row(x) = t_amp * row_x - r_amp * cov.row(y);
        cov.row(y) = r_amp * row_x + t_amp * cov.row(y);
        const Eigen::VectorXd col_x = cov.col(x);
        cov.col(x) = t_amp * col_x - r_amp * cov.col(y);
        cov.col(y) = r_amp * col_x + t_amp * cov.col(y);
    };
    for (std::size_t m = 0; m < n_env; ++m) {
        const Eigen::Index b = static_cast<Eigen::Index>(2 * (2 + m));
        mix(2, b);     // q quadratures of (a2, b_m)
        mix(3, b + 1); // p quadratures of (a2, b_m)
    }

    std::vector<std::string> labels = {"a1", "a2"};
    for (std::size_t m = 0; m < n_env; ++m) {
        labels.push_back("b" + std::to_string(m));
    }
    return GaussianState(std::move(labels), std::move(cov));
}

GaussianState collective_mode_reduction(const GaussianState& chain_state, double t_sq) {
    if (chain_state.n_modes() < 3) {
        throw std::invalid_argument("need a system pair plus at least one environment mode");
    }
    if (!(t_sq >= 0.0 && t_sq <= 1.0)) {
        throw std::invalid_argument("t_sq must lie in [0, 1]");
    }
    const auto n_env = static_cast<Eigen::Index>(chain_state.n_modes() - 2);

    // The chain leaves its footprint on the environment along the geometric
    // direction (1, T, T^2, ...) with T the per-splitter amplitude: mode b_m
    // receives the system amplitude after m prior transmissions. Rotating that
    // direction onto the first environment slot isolates the one collective
    // mode carrying all system-environment correlation.
    const double t_amp = std::pow(t_sq, 1.0 / (2.0 * static_cast<double>(n_env)));
    Eigen::VectorXd direction(n_env);
    double weight = 1.0;
    for (Eigen::Index m = 0; m < n_env; ++m) {
        direction[m] = weight;
        weight *= t_amp;
    }
    direction.normalize();

    // Householder completion with first row = direction (reflector through
    // direction + e0, which never cancels since direction[0] > 0).
    Eigen::VectorXd v = direction;
    v[0] += 1.0;
    const Eigen::MatrixXd o =
        2.0 / v.squaredNorm() * v * v.transpose() -
        Eigen::MatrixXd::Identity(n_env, n_env);

    Eigen::MatrixXd full = Eigen::MatrixXd::Zero(chain_state.dim(), chain_state.dim());
    full.topLeftCorner<4, 4>().setIdentity();
    for (Eigen::Index a = 0; a < n_env; ++a) {
        for (Eigen::Index b = 0; b < n_env; ++b) {
            full(4 + 2 * a, 4 + 2 * b) = o(a, b);
            full(4 + 2 * a + 1, 4 + 2 * b + 1) = o(a, b);
        }
    }
    const GaussianState rotated = apply(chain_state, SymplecticMatrix(std::move(full)));
    const GaussianState kept =
        reduce(rotated, {rotated.modes()[0], rotated.modes()[1], rotated.modes()[2]});
    return relabeled(kept, {kept.modes()[0], kept.modes()[1], "c0"});
}

GaussianState fokker_planck_from(const GaussianState& initial, double tau, double n_tilde,
                                 std::size_t steps) {
    if (initial.n_modes() != 2) {
        throw std::invalid_argument("integrator expects a two-mode system state");
    }
    if (steps == 0) {
        throw std::invalid_argument("integrator needs at least one step");
    }
    if (!std::isfinite(tau) || tau < 0.0) {
        throw std::invalid_argument("horizon tau must be finite and >= 0");
    }
    if (!(n_tilde >= 1.0)) {
        throw std::invalid_argument("n_tilde must be >= 1");
    }
    // dV/dtau = A V + V A^T + D with gamma = 1: damping -1/2 and diffusion
    // n_tilde on the second mode only.
    Eigen::Matrix4d a = Eigen::Matrix4d::Zero();
    a(2, 2) = a(3, 3) = -0.5;
    Eigen::Matrix4d d = Eigen::Matrix4d::Zero();
    d(2, 2) = d(3, 3) = n_tilde;
    const auto rhs = [&](const Eigen::Matrix4d& m) -> Eigen::Matrix4d {
        return a * m + m * a.transpose() + d;
    };

    Eigen::Matrix4d v = initial.cov();
    const double h = tau / static_cast<double>(steps);
    for (std::size_t k = 0; k < steps; ++k) {
        const Eigen::Matrix4d k1 = rhs(v);
        const Eigen::Matrix4d k2 = rhs(v + 0.5 * h * k1);
        const Eigen::Matrix4d k3 = rhs(v + 0.5 * h * k2);
        const Eigen::Matrix4d k4 = rhs(v + h * k3);
        v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return GaussianState(initial.modes(), v);
}

GaussianState fokker_planck_evolve(const ScenarioParams& params, std::size_t steps) {
    params.validate();
    if (!(params.t_sq > 0.0)) {
        throw std::invalid_argument("fokker_planck_evolve needs t_sq > 0 (finite horizon)");
    }
    const double tau = -std::log(params.t_sq);
    return fokker_planck_from(relabeled(two_mode_squeezed(params.s), {"a1", "a2"}), tau,
                              params.n_tilde(), steps);
}

GaussianState purified_collective_evolve(const ScenarioParams& params) {
    params.validate();
    // cosh(2 s_e) = n_tilde makes each half of the pair a thermal n_tilde mode.
    const double s_e = 0.5 * std::acosh(params.n_tilde());
    const GaussianState init =
        tensor(relabeled(two_mode_squeezed(params.s), {"a1", "a2"}),
               relabeled(two_mode_squeezed(s_e), {"c0", "c0p"}));
    return apply(init, beam_splitter(std::sqrt(params.t_sq), 1, 2, 4));
}

} // namespace cvent
