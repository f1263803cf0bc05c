#pragma once

#include <Eigen/Core>

#include "cvent/state.hpp"

namespace cvent {

/// Real linear transform S on quadratures with S*Omega*S^T = Omega.
/// Validated to 1e-10 at construction.
class SymplecticMatrix {
public:
    explicit SymplecticMatrix(Eigen::MatrixXd mat);

    const Eigen::MatrixXd& mat() const { return mat_; }
    Eigen::Index n_modes() const { return mat_.rows() / 2; }

    friend SymplecticMatrix operator*(const SymplecticMatrix& a, const SymplecticMatrix& b);

private:
    Eigen::MatrixXd mat_;
};

/// Beam splitter on modes (i, j) of an n-mode register, identity elsewhere.
///
/// `t` is the amplitude transmittivity in [0, 1]; with r = +sqrt(1 - t^2) the
/// (i, j) action is x_i -> t*x_i - r*x_j, x_j -> r*x_i + t*x_j (reflection
/// sign on the upper-right block).
SymplecticMatrix beam_splitter(double t, std::size_t i, std::size_t j, std::size_t n_modes);

/// Two-mode squeezer: q parts mix with cosh/sinh(+), p parts with cosh/sinh(-),
/// so that acting on a two-mode vacuum produces two_mode_squeezed(s).
SymplecticMatrix two_mode_squeezer(double s, std::size_t i, std::size_t j, std::size_t n_modes);

/// cov' = S * cov * S^T, labels preserved.
GaussianState apply(const GaussianState& state, const SymplecticMatrix& transform);

/// Orthogonal mixing of N modes into collective modes, lifted to quadratures.
///
/// Row 0 of the underlying N x N matrix is the uniform combination 1/sqrt(N),
/// i.e. the collective mode c0; the remaining rows are the normalized real
/// Fourier basis (cosine/sine pairs, plus the alternating row for even N).
SymplecticMatrix collective_mixer(std::size_t n_modes);

} // namespace cvent
