#include "cvent/separability.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

#include <Eigen/Eigenvalues>

namespace cvent {

namespace {

void check_partition(const GaussianState& state, const Partition& partition) {
    if (partition.side_a.empty() || partition.side_b.empty()) {
        throw InvalidSelection("both partition sides must be non-empty");
    }
    std::unordered_set<std::string> seen;
    for (const auto* side : {&partition.side_a, &partition.side_b}) {
        for (const auto& label : *side) {
            state.mode_index(label);
            if (!seen.insert(label).second) {
                throw InvalidSelection("mode \"" + label + "\" appears twice in the partition");
            }
        }
    }
    if (seen.size() != state.n_modes()) {
        throw InvalidSelection("partition must cover every mode of the state");
    }
}

} // namespace

Eigen::MatrixXd partial_momentum_reversal(const GaussianState& state,
                                          const ModeSelection& reversed) {
    Eigen::VectorXd lambda = Eigen::VectorXd::Ones(state.dim());
    std::unordered_set<std::string> seen;
    for (const auto& label : reversed) {
        if (!seen.insert(label).second) {
            throw InvalidSelection("mode \"" + label + "\" selected twice");
        }
        lambda[static_cast<Eigen::Index>(2 * state.mode_index(label)) + 1] = -1.0;
    }
    return lambda.asDiagonal() * state.cov() * lambda.asDiagonal();
}

double ppt_margin(const GaussianState& state, const Partition& partition) {
    check_partition(state, partition);
    if (partition.side_a.size() != 1 && partition.side_b.size() != 1) {
        throw UnsupportedPartition(
            "PPT is conclusive only for 1 x N partitions; refusing a " +
            std::to_string(partition.side_a.size()) + " x " +
            std::to_string(partition.side_b.size()) + " split");
    }
    const Eigen::MatrixXd pt = partial_momentum_reversal(state, partition.side_b);
    return symplectic_eigenvalues(pt).minCoeff() - 1.0;
}

bool is_separable(const GaussianState& state, const Partition& partition) {
    return ppt_margin(state, partition) >= -kSeparabilityTol;
}

bool p_function_classical(const GaussianState& state) {
    Eigen::MatrixXd shifted = state.cov();
    shifted.diagonal().array() -= 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(shifted, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -kSeparabilityTol;
}

TripartiteClass classify_tripartite(const GaussianState& state) {
    if (state.n_modes() != 3) {
        throw std::invalid_argument("tripartite classification needs exactly 3 modes, got " +
                                    std::to_string(state.n_modes()));
    }
    const auto& labels = state.modes();
    TripartiteClass out;
    for (int k = 0; k < 3; ++k) {
        ModeSelection rest;
        for (int m = 0; m < 3; ++m) {
            if (m != k) {
                rest.push_back(labels[static_cast<std::size_t>(m)]);
            }
        }
        out.bipartition_margins[static_cast<std::size_t>(k)] =
            ppt_margin(state, Partition{{labels[static_cast<std::size_t>(k)]}, rest});
        out.pair_margins[static_cast<std::size_t>(k)] =
            ppt_margin(reduce(state, rest), Partition{{rest[0]}, {rest[1]}});
    }

    const auto entangled = [](double margin) { return margin < -kSeparabilityTol; };
    const bool fully_inseparable = entangled(out.bipartition_margins[0]) &&
                                   entangled(out.bipartition_margins[1]) &&
                                   entangled(out.bipartition_margins[2]);
    if (!fully_inseparable) {
        out.kind = TripartiteKind::ProductOrBiseparable;
        return out;
    }

    // pair_margins[k] belongs to the pair that excludes mode k.
    std::vector<int> entangled_pairs;
    for (int k = 0; k < 3; ++k) {
        if (entangled(out.pair_margins[static_cast<std::size_t>(k)])) {
            entangled_pairs.push_back(k);
        }
    }
    switch (entangled_pairs.size()) {
    case 0:
        out.kind = TripartiteKind::GHZType;
        break;
    case 1: {
        out.kind = TripartiteKind::OnePairOnly;
        const int k = entangled_pairs[0];
        for (int m = 0; m < 3; ++m) {
            if (m != k) {
                out.witnesses.push_back(labels[static_cast<std::size_t>(m)]);
            }
        }
        break;
    }
    case 2: {
        out.kind = TripartiteKind::TwoWay;
        const int shared = 3 - entangled_pairs[0] - entangled_pairs[1];
        out.witnesses.push_back(labels[static_cast<std::size_t>(shared)]);
        for (int m = 0; m < 3; ++m) {
            if (m != shared) {
                out.witnesses.push_back(labels[static_cast<std::size_t>(m)]);
            }
        }
        break;
    }
    default:
        out.kind = TripartiteKind::FullyInseparableWithPairs;
        break;
    }
    return out;
}

const char* to_string(TripartiteKind kind) {
    switch (kind) {
    case TripartiteKind::ProductOrBiseparable:
        return "biseparable";
    case TripartiteKind::OnePairOnly:
        return "one_pair";
    case TripartiteKind::TwoWay:
        return "two_way";
    case TripartiteKind::GHZType:
        return "ghz";
    case TripartiteKind::FullyInseparableWithPairs:
        return "full_with_pairs";
    }
    return "unknown";
}

} // namespace cvent
