#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "cvent/dynamics.hpp"
#include "cvent/separability.hpp"

namespace cvent {

/// Which dynamical construction backs a sweep point.
enum class SweepModel {
    Collective, ///< single beam splitter onto one thermal collective mode
    Chain,      ///< finite beam-splitter chain, then collective reduction
    ClosedForm, ///< analytic three-mode covariance
};

/// Grid in the (n_bar, t_sq) plane at fixed squeezing, evaluated under one
/// dynamical model. Axis values must be ascending and in range.
struct SweepGrid {
    std::vector<double> n_bar_values;
    std::vector<double> t_sq_values;
    double s = 1.0;
    SweepModel model = SweepModel::Collective;
    ChainParams chain{};
};

/// `count` evenly spaced values from lo to hi inclusive (count >= 2), or the
/// single value lo when count == 1.
std::vector<double> linspace(double lo, double hi, std::size_t count);

/// One classified grid point. Margins follow the (a1, a2, c0) mode roles of
/// the collective picture; under the Chain model margin_a1c0 is the margin of
/// a1 against the entire environment (same verdict, exact chain geometry).
struct SweepRecord {
    double n_bar = 0.0;
    double t_sq = 0.0;
    double s = 0.0;
    double margin_a1a2 = 0.0;
    double margin_a1c0 = 0.0;
    double margin_a2c0 = 0.0;
    double bip_a1 = 0.0; ///< a1 vs (a2, c0)
    double bip_a2 = 0.0; ///< a2 vs (a1, c0)
    double bip_c0 = 0.0; ///< c0 vs (a1, a2)
    TripartiteKind kind = TripartiteKind::ProductOrBiseparable;
};

/// Critical transmittivities at fixed n_bar (s-independent for s != 0):
/// the pair (a1, a2) is separable for t_sq <= sys = n_bar/(1 + n_bar), and
/// the pair (a1, c0) is separable for t_sq >= env = 1/(1 + n_bar).
struct Thresholds {
    double sys = 0.0;
    double env = 1.0;
};

Thresholds analytic_thresholds(double n_bar);

/// Which pair's separability boundary to locate along t_sq.
enum class BoundaryKind {
    SysPair, ///< (a1, a2)
    EnvPair, ///< (a1, c0)
};

/// Zero crossing of f over [lo, hi] located by bisection to within tol.
/// Returns nullopt when f(lo) and f(hi) agree in sign.
std::optional<double> bisect(const std::function<double(double)>& f, double lo, double hi,
                             double tol);

/// Locates the t_sq at which the chosen pair's PPT margin, computed from
/// collective_evolve, changes sign. Bisects t_sq over [1e-6, 1 - 1e-6] to
/// avoid the degenerate endpoints; nullopt when there is no sign change over
/// that bracket (e.g. s = 0).
std::optional<double> boundary_bisect(double n_bar, BoundaryKind which, double s,
                                      double tol = 1e-8);

/// Builds and classifies a single scenario under the chosen model.
SweepRecord evaluate_point(const ScenarioParams& params, SweepModel model,
                           const ChainParams& chain = {});

/// One record per grid point, n_bar-major then t_sq, deterministic order.
std::vector<SweepRecord> sweep(const SweepGrid& grid);

} // namespace cvent
