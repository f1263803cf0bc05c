#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "cvent/errors.hpp"

namespace cvent {

/// Ordered subset of a state's mode labels.
using ModeSelection = std::vector<std::string>;

/// Result of a physicality check: `margin` = min nu_k - 1.
struct Physicality {
    bool physical = false;
    double margin = 0.0;
};

/// An n-mode Gaussian state represented by its quadrature covariance matrix.
///
/// Quadratures are ordered mode-major (q1, p1, q2, p2, ...) and normalized so
/// that the vacuum covariance is the identity. First moments are not tracked;
/// they play no role in any of the entanglement questions handled here.
///
/// Construction symmetrizes the matrix ((V + V^T)/2, applied silently) and
/// rejects covariances whose smallest symplectic eigenvalue falls below
/// 1 - 1e-9. Instances are immutable values and safe to share across threads.
class GaussianState {
public:
    GaussianState(std::vector<std::string> modes, Eigen::MatrixXd cov);

    const std::vector<std::string>& modes() const { return modes_; }
    const Eigen::MatrixXd& cov() const { return cov_; }

    std::size_t n_modes() const { return modes_.size(); }
    Eigen::Index dim() const { return cov_.rows(); }

    /// Position of `label` in the mode list; throws InvalidSelection if absent.
    std::size_t mode_index(const std::string& label) const;

private:
    std::vector<std::string> modes_;
    Eigen::MatrixXd cov_;
};

/// The symplectic form Omega = diag([[0,1],[-1,0]], ...), 2n x 2n.
Eigen::MatrixXd symplectic_form(Eigen::Index n_modes);

/// n-mode vacuum (identity covariance), with auto-generated labels m0..m{n-1}.
GaussianState vacuum_state(std::size_t n_modes);

/// Single thermal mode with covariance diag(n_tilde, n_tilde), n_tilde = 2*nbar + 1 >= 1.
GaussianState thermal_state(double n_tilde);

/// Two-mode squeezed state: cosh(2s) on the diagonal blocks, sinh(2s)*sigma_z off-diagonal.
GaussianState two_mode_squeezed(double s);

/// Direct sum of two states; label sets must be disjoint.
GaussianState tensor(const GaussianState& a, const GaussianState& b);

/// Gaussian partial trace: principal submatrix on `keep`, in `keep` order.
GaussianState reduce(const GaussianState& state, const ModeSelection& keep);

/// Same covariance under fresh labels.
GaussianState relabeled(const GaussianState& state, std::vector<std::string> labels);

/// Symplectic eigenvalues nu_k >= 0 of a covariance matrix, sorted ascending.
///
/// The nu_k are defined by eig(Omega*V) = {+-i*nu_k}. For positive definite V
/// they are computed from the singular values of L^T*Omega*L with V = L*L^T,
/// a stable symmetric-factorization route; each nu appears twice in that
/// spectrum. The matrix overload accepts covariances that need not be
/// physical (e.g. partially momentum-reversed ones).
Eigen::VectorXd symplectic_eigenvalues(const Eigen::MatrixXd& cov);
Eigen::VectorXd symplectic_eigenvalues(const GaussianState& state);

/// Uncertainty-principle check; margin = min nu_k - 1, physical iff margin >= -1e-9.
Physicality is_physical(const Eigen::MatrixXd& cov);
Physicality is_physical(const GaussianState& state);

} // namespace cvent
