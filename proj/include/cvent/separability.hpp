#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "cvent/state.hpp"

namespace cvent {

/// PPT verdicts with |margin| below this are treated as "on the boundary"
/// and resolve to separable.
inline constexpr double kSeparabilityTol = 1e-9;

/// Bipartition of a state's modes into side A and side B by label.
/// Every mode must appear exactly once across the two sides.
struct Partition {
    ModeSelection side_a;
    ModeSelection side_b;
};

/// Lambda * V * Lambda with Lambda flipping the p quadrature of every mode in
/// `reversed` (the phase-space image of partial transposition). The result
/// need not be a physical covariance; an empty selection returns V unchanged.
Eigen::MatrixXd partial_momentum_reversal(const GaussianState& state,
                                          const ModeSelection& reversed);

/// min_k nu_k(PT(V)) - 1 for the partial transpose across `partition`.
/// Negative values witness entanglement. Only 1 x N partitions (either side a
/// single mode) are conclusive for Gaussian states; larger splits throw
/// UnsupportedPartition.
double ppt_margin(const GaussianState& state, const Partition& partition);

/// margin >= -kSeparabilityTol.
bool is_separable(const GaussianState& state, const Partition& partition);

/// True when V - I >= 0, i.e. the state has a positive P representation and
/// all its reduced states and partitions are classical mixtures of coherent
/// states (hence separable under every cut).
bool p_function_classical(const GaussianState& state);

enum class TripartiteKind {
    ProductOrBiseparable,
    OnePairOnly,
    TwoWay,
    GHZType,
    FullyInseparableWithPairs,
};

/// Entanglement structure of a three-mode state.
///
/// `pair_margins` and `bipartition_margins` are keyed by the index of the
/// distinguished mode(s): pair_margins[k] is the margin of the pair that
/// excludes mode k, bipartition_margins[k] the margin of mode k vs the rest.
struct TripartiteClass {
    TripartiteKind kind = TripartiteKind::ProductOrBiseparable;
    std::array<double, 3> pair_margins{};
    std::array<double, 3> bipartition_margins{};
    /// OnePairOnly: the two modes of the entangled pair.
    /// TwoWay: the shared mode first, then its two partners.
    std::vector<std::string> witnesses;
};

/// Classifies a three-mode state by its three pairwise PPT verdicts and three
/// 1-vs-2 bipartition verdicts. If every bipartition is separable the state is
/// ProductOrBiseparable regardless of pair verdicts; otherwise the pair count
/// selects GHZType (0), OnePairOnly (1), TwoWay (2) or
/// FullyInseparableWithPairs (3).
TripartiteClass classify_tripartite(const GaussianState& state);

const char* to_string(TripartiteKind kind);

} // namespace cvent
