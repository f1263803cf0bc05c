#include "cvent/symplectic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace cvent {

namespace {

constexpr double kSymplecticTol = 1e-10;

void check_mode_pair(std::size_t i, std::size_t j, std::size_t n_modes) {
    if (n_modes == 0) {
        throw std::invalid_argument("transform needs at least one mode");
    }
    if (i == j) {
        throw std::invalid_argument("mode indices must differ");
    }
    if (i >= n_modes || j >= n_modes) {
        throw std::invalid_argument("mode index out of range for " + std::to_string(n_modes) +
                                    " modes");
    }
}

} // namespace

SymplecticMatrix::SymplecticMatrix(Eigen::MatrixXd mat) : mat_(std::move(mat)) {
    if (mat_.rows() == 0 || mat_.rows() != mat_.cols() || mat_.rows() % 2 != 0) {
        throw std::invalid_argument("symplectic matrix must be square with even dimension");
    }
    if (!mat_.allFinite()) {
        throw std::invalid_argument("symplectic matrix contains non-finite entries");
    }
    const Eigen::MatrixXd omega = symplectic_form(mat_.rows() / 2);
    const double dev = (mat_ * omega * mat_.transpose() - omega).cwiseAbs().maxCoeff();
    if (dev > kSymplecticTol) {
        throw std::invalid_argument("matrix is not symplectic (S*Omega*S^T deviates by " +
                                    std::to_string(dev) + ")");
    }
}

SymplecticMatrix operator*(const SymplecticMatrix& a, const SymplecticMatrix& b) {
    if (a.mat_.rows() != b.mat_.rows()) {
        throw std::invalid_argument("symplectic dimensions do not match");
    }
    return SymplecticMatrix(a.mat_ * b.mat_);
}

SymplecticMatrix beam_splitter(double t, std::size_t i, std::size_t j, std::size_t n_modes) {
    check_mode_pair(i, j, n_modes);
    if (!(t >= 0.0 && t <= 1.0)) {
        throw std::invalid_argument("transmittivity amplitude must lie in [0, 1]");
    }
    const double r = std::sqrt(1.0 - t * t);
    Eigen::MatrixXd mat = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
    const Eigen::Index qi = static_cast<Eigen::Index>(2 * i);
    const Eigen::Index qj = static_cast<Eigen::Index>(2 * j);
    for (Eigen::Index off = 0; off < 2; ++off) {
        mat(qi + off, qi + off) = t;
        mat(qi + off, qj + off) = -r;
        mat(qj + off, qi + off) = r;
        mat(qj + off, qj + off) = t;
    }
    return SymplecticMatrix(std::move(mat));
}

SymplecticMatrix two_mode_squeezer(double s, std::size_t i, std::size_t j, std::size_t n_modes) {
    check_mode_pair(i, j, n_modes);
    if (!std::isfinite(s)) {
        throw std::invalid_argument("squeezing parameter must be finite");
    }
    const double c = std::cosh(s);
    const double h = std::sinh(s);
    Eigen::MatrixXd mat = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
    const Eigen::Index qi = static_cast<Eigen::Index>(2 * i);
    const Eigen::Index qj = static_cast<Eigen::Index>(2 * j);
    // q parts mix with +sinh, p parts with -sinh.
    mat(qi, qi) = c;
    mat(qi, qj) = h;
    mat(qj, qi) = h;
    mat(qj, qj) = c;
    mat(qi + 1, qi + 1) = c;
    mat(qi + 1, qj + 1) = -h;
    mat(qj + 1, qi + 1) = -h;
    mat(qj + 1, qj + 1) = c;
    return SymplecticMatrix(std::move(mat));
}

GaussianState apply(const GaussianState& state, const SymplecticMatrix& transform) {
    if (transform.mat().rows() != state.dim()) {
        throw std::invalid_argument("transform dimension " +
                                    std::to_string(transform.mat().rows()) +
                                    " does not match state dimension " +
                                    std::to_string(state.dim()));
    }
    return GaussianState(state.modes(),
                         transform.mat() * state.cov() * transform.mat().transpose());
}

SymplecticMatrix collective_mixer(std::size_t n_modes) {
    if (n_modes == 0) {
        throw std::invalid_argument("mixer needs at least one mode");
    }
    const auto n = static_cast<Eigen::Index>(n_modes);
    Eigen::MatrixXd o(n, n);
    const double pi = std::acos(-1.0);
    Eigen::Index row = 0;
    o.row(row++).setConstant(1.0 / std::sqrt(static_cast<double>(n)));
    for (Eigen::Index k = 1; 2 * k < n; ++k) {
        for (Eigen::Index m = 0; m < n; ++m) {
            const double angle = 2.0 * pi * static_cast<double>(k * m) / static_cast<double>(n);
            o(row, m) = std::sqrt(2.0 / static_cast<double>(n)) * std::cos(angle);
            o(row + 1, m) = std::sqrt(2.0 / static_cast<double>(n)) * std::sin(angle);
        }
        row += 2;
    }
    if (n % 2 == 0 && n > 1) {
        for (Eigen::Index m = 0; m < n; ++m) {
            o(row, m) = (m % 2 == 0 ? 1.0 : -1.0) / std::sqrt(static_cast<double>(n));
        }
        ++row;
    }
    // row == n by construction; lift O to quadratures as O tensor I_2.
    Eigen::MatrixXd lifted = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = 0; b < n; ++b) {
            lifted(2 * a, 2 * b) = o(a, b);
            lifted(2 * a + 1, 2 * b + 1) = o(a, b);
        }
    }
    return SymplecticMatrix(std::move(lifted));
}

} // namespace cvent
