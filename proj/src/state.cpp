#include "cvent/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>
#include <utility>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace cvent {

namespace {

constexpr double kPhysicalityTol = 1e-9;

void check_matrix_shape(const Eigen::MatrixXd& cov) {
    if (cov.rows() == 0 || cov.rows() != cov.cols() || cov.rows() % 2 != 0) {
        throw MalformedState("covariance must be square with even, nonzero dimension, got " +
                             std::to_string(cov.rows()) + "x" + std::to_string(cov.cols()));
    }
    if (!cov.allFinite()) {
        throw MalformedState("covariance contains non-finite entries");
    }
}

void check_symmetric(const Eigen::MatrixXd& cov) {
    const double scale = std::max(1.0, cov.cwiseAbs().maxCoeff());
    const double dev = (cov - cov.transpose()).cwiseAbs().maxCoeff();
    if (dev > 1e-9 * scale) {
        throw MalformedState("covariance is not symmetric (asymmetry " + std::to_string(dev) +
                             ")");
    }
}

Eigen::VectorXd pair_averaged_ascending(Eigen::VectorXd values) {
    // `values` holds each symplectic eigenvalue twice, up to roundoff.
    std::sort(values.begin(), values.end());
    Eigen::VectorXd nus(values.size() / 2);
    for (Eigen::Index k = 0; k < nus.size(); ++k) {
        nus[k] = 0.5 * (values[2 * k] + values[2 * k + 1]);
    }
    return nus;
}

} // namespace

GaussianState::GaussianState(std::vector<std::string> modes, Eigen::MatrixXd cov)
    : modes_(std::move(modes)) {
    if (modes_.empty()) {
        throw std::invalid_argument("state needs at least one mode");
    }
    std::unordered_set<std::string> seen;
    for (const auto& label : modes_) {
        if (!seen.insert(label).second) {
            throw DuplicateMode("duplicate mode label \"" + label + "\"");
        }
    }
    check_matrix_shape(cov);
    if (static_cast<std::size_t>(cov.rows()) != 2 * modes_.size()) {
        throw MalformedState("covariance dimension " + std::to_string(cov.rows()) +
                             " does not match " + std::to_string(modes_.size()) + " modes");
    }
    cov_ = 0.5 * (cov + cov.transpose());
    const Physicality phys = is_physical(cov_);
    if (!phys.physical) {
        throw UnphysicalState("covariance violates the uncertainty principle (margin " +
                              std::to_string(phys.margin) + ")");
    }
}

std::size_t GaussianState::mode_index(const std::string& label) const {
    const auto it = std::find(modes_.begin(), modes_.end(), label);
    if (it == modes_.end()) {
        throw InvalidSelection("no mode labeled \"" + label + "\"");
    }
    return static_cast<std::size_t>(it - modes_.begin());
}

Eigen::MatrixXd symplectic_form(Eigen::Index n_modes) {
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
    for (Eigen::Index k = 0; k < n_modes; ++k) {
        omega(2 * k, 2 * k + 1) = 1.0;
        omega(2 * k + 1, 2 * k) = -1.0;
    }
    return omega;
}

GaussianState vacuum_state(std::size_t n_modes) {
    if (n_modes == 0) {
        throw std::invalid_argument("vacuum_state needs at least one mode");
    }
    std::vector<std::string> labels(n_modes);
    for (std::size_t k = 0; k < n_modes; ++k) {
        labels[k] = "m" + std::to_string(k);
    }
    return GaussianState(std::move(labels),
                         Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes));
}

GaussianState thermal_state(double n_tilde) {
    if (!(n_tilde >= 1.0)) {
        throw UnphysicalState("thermal occupation n_tilde = " + std::to_string(n_tilde) +
                              " is below the vacuum value 1");
    }
    return GaussianState({"m0"}, n_tilde * Eigen::Matrix2d::Identity());
}

GaussianState two_mode_squeezed(double s) {
    if (!std::isfinite(s)) {
        throw std::invalid_argument("squeezing parameter must be finite");
    }
    const double c = std::cosh(2.0 * s);
    const double h = std::sinh(2.0 * s);
    Eigen::Matrix4d cov = Eigen::Matrix4d::Zero();
    cov.diagonal().setConstant(c);
    cov(0, 2) = cov(2, 0) = h;
    cov(1, 3) = cov(3, 1) = -h;
    return GaussianState({"m0", "m1"}, cov);
}

GaussianState tensor(const GaussianState& a, const GaussianState& b) {
    std::vector<std::string> labels = a.modes();
    for (const auto& label : b.modes()) {
        if (std::find(labels.begin(), labels.end(), label) != labels.end()) {
            throw DuplicateMode("mode label \"" + label + "\" appears on both sides");
        }
        labels.push_back(label);
    }
    Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(a.dim() + b.dim(), a.dim() + b.dim());
    cov.topLeftCorner(a.dim(), a.dim()) = a.cov();
    cov.bottomRightCorner(b.dim(), b.dim()) = b.cov();
    return GaussianState(std::move(labels), std::move(cov));
}

GaussianState reduce(const GaussianState& state, const ModeSelection& keep) {
    if (keep.empty()) {
        throw InvalidSelection("mode selection is empty");
    }
    std::unordered_set<std::string> seen;
    std::vector<std::size_t> idx;
    idx.reserve(keep.size());
    for (const auto& label : keep) {
        if (!seen.insert(label).second) {
            throw InvalidSelection("mode \"" + label + "\" selected twice");
        }
        idx.push_back(state.mode_index(label));
    }
    const Eigen::Index d = static_cast<Eigen::Index>(2 * keep.size());
    Eigen::MatrixXd cov(d, d);
    for (std::size_t r = 0; r < keep.size(); ++r) {
        for (std::size_t c = 0; c < keep.size(); ++c) {
            cov.block<2, 2>(2 * r, 2 * c) =
                state.cov().block<2, 2>(2 * idx[r], 2 * idx[c]);
        }
    }
    return GaussianState(keep, std::move(cov));
}

GaussianState relabeled(const GaussianState& state, std::vector<std::string> labels) {
    if (labels.size() != state.n_modes()) {
        throw InvalidSelection("expected " + std::to_string(state.n_modes()) + " labels, got " +
                               std::to_string(labels.size()));
    }
    return GaussianState(std::move(labels), state.cov());
}

Eigen::VectorXd symplectic_eigenvalues(const Eigen::MatrixXd& cov) {
    check_matrix_shape(cov);
    check_symmetric(cov);
    const Eigen::Index n = cov.rows() / 2;
    const Eigen::MatrixXd omega = symplectic_form(n);

    // For V = F F^T the spectrum of F^T Omega F is that of Omega V; the
    // antisymmetric factor turns the problem into an SVD, which is far better
    // conditioned than the direct non-symmetric eigenproblem.
    Eigen::MatrixXd factor;
    Eigen::LLT<Eigen::MatrixXd> llt(cov);
    if (llt.info() == Eigen::Success) {
        factor = llt.matrixL();
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
        if (es.info() != Eigen::Success) {
            throw MalformedState("eigendecomposition of covariance failed");
        }
        const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
        if (es.eigenvalues().minCoeff() < -1e-9 * scale) {
            // Indefinite input (possible for raw matrices): fall back to the
            // defining complex eigenproblem of Omega V.
            Eigen::EigenSolver<Eigen::MatrixXd> ges(omega * cov, false);
            if (ges.info() != Eigen::Success) {
                throw MalformedState("eigendecomposition of Omega*V failed");
            }
            return pair_averaged_ascending(ges.eigenvalues().imag().cwiseAbs());
        }
        factor = es.eigenvectors() *
                 es.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal();
    }
    Eigen::BDCSVD<Eigen::MatrixXd> svd(factor.transpose() * omega * factor);
    return pair_averaged_ascending(svd.singularValues());
}

Eigen::VectorXd symplectic_eigenvalues(const GaussianState& state) {
    return symplectic_eigenvalues(state.cov());
}

Physicality is_physical(const Eigen::MatrixXd& cov) {
    const Eigen::VectorXd nus = symplectic_eigenvalues(cov);
    Physicality result;
    result.margin = nus.minCoeff() - 1.0;
    result.physical = result.margin >= -kPhysicalityTol;
    return result;
}

Physicality is_physical(const GaussianState& state) {
    return is_physical(state.cov());
}

} // namespace cvent
