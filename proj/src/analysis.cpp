#include "cvent/analysis.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace cvent {

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    if (count == 0) {
        throw std::invalid_argument("linspace needs at least one value");
    }
    if (count == 1) {
        return {lo};
    }
    std::vector<double> values(count);
    for (std::size_t k = 0; k < count; ++k) {
        values[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(count - 1);
    }
    return values;
}

Thresholds analytic_thresholds(double n_bar) {
    if (!std::isfinite(n_bar) || n_bar < 0.0) {
        throw std::invalid_argument("n_bar must be a finite value >= 0");
    }
    return Thresholds{n_bar / (1.0 + n_bar), 1.0 / (1.0 + n_bar)};
}

std::optional<double> bisect(const std::function<double(double)>& f, double lo, double hi,
                             double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    if (!(lo < hi)) {
        throw std::invalid_argument("bracket must satisfy lo < hi");
    }
    double f_lo = f(lo);
    const double f_hi = f(hi);
    if (f_lo == 0.0) {
        return lo;
    }
    if (f_hi == 0.0) {
        return hi;
    }
    if ((f_lo > 0.0) == (f_hi > 0.0)) {
        return std::nullopt;
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = f(mid);
        if (f_mid == 0.0) {
            return mid;
        }
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::optional<double> boundary_bisect(double n_bar, BoundaryKind which, double s, double tol) {
    const auto margin_at = [&](double t_sq) {
        const GaussianState state = collective_evolve(ScenarioParams{s, n_bar, t_sq});
        const ModeSelection pair = which == BoundaryKind::SysPair
                                       ? ModeSelection{"a1", "a2"}
                                       : ModeSelection{"a1", "c0"};
        return ppt_margin(reduce(state, pair), Partition{{pair[0]}, {pair[1]}});
    };
    const double lo = 1e-6;
    const double hi = 1.0 - 1e-6;
    // A genuine boundary separates decisively signed margins; a flat
    // zero-noise profile (e.g. s = 0) must not register as a crossing.
    const double f_lo = margin_at(lo);
    const double f_hi = margin_at(hi);
    constexpr double kDecisive = 1e-12;
    const bool crossing = (f_lo < -kDecisive && f_hi > kDecisive) ||
                          (f_lo > kDecisive && f_hi < -kDecisive);
    if (!crossing) {
        return std::nullopt;
    }
    return bisect(margin_at, lo, hi, tol);
}

SweepRecord evaluate_point(const ScenarioParams& params, SweepModel model,
                           const ChainParams& chain) {
    params.validate();
    SweepRecord rec;
    rec.n_bar = params.n_bar;
    rec.t_sq = params.t_sq;
    rec.s = params.s;

    if (model == SweepModel::Chain) {
        const GaussianState full = chain_evolve(params, chain);
        const GaussianState eff3 = collective_mode_reduction(full, params.t_sq);
        const TripartiteClass cls = classify_tripartite(eff3);
        rec.kind = cls.kind;
        rec.margin_a2c0 = cls.pair_margins[0];
        rec.bip_c0 = cls.bipartition_margins[2];

        // Everything involving the environment side is evaluated against the
        // real chain modes (genuine 1 x N partitions), not the reduction.
        rec.margin_a1a2 =
            ppt_margin(reduce(full, {"a1", "a2"}), Partition{{"a1"}, {"a2"}});
        ModeSelection env(full.modes().begin() + 2, full.modes().end());
        ModeSelection a1_env = {"a1"};
        a1_env.insert(a1_env.end(), env.begin(), env.end());
        rec.margin_a1c0 = ppt_margin(reduce(full, a1_env), Partition{{"a1"}, env});

        ModeSelection rest_of_a1 = {"a2"};
        rest_of_a1.insert(rest_of_a1.end(), env.begin(), env.end());
        rec.bip_a1 = ppt_margin(full, Partition{{"a1"}, rest_of_a1});
        ModeSelection rest_of_a2 = {"a1"};
        rest_of_a2.insert(rest_of_a2.end(), env.begin(), env.end());
        rec.bip_a2 = ppt_margin(full, Partition{{"a2"}, rest_of_a2});
        return rec;
    }

    const GaussianState state3 = model == SweepModel::Collective
                                     ? collective_evolve(params)
                                     : closed_form_collective(params);
    const TripartiteClass cls = classify_tripartite(state3);
    rec.kind = cls.kind;
    rec.margin_a1a2 = cls.pair_margins[2];
    rec.margin_a1c0 = cls.pair_margins[1];
    rec.margin_a2c0 = cls.pair_margins[0];
    rec.bip_a1 = cls.bipartition_margins[0];
    rec.bip_a2 = cls.bipartition_margins[1];
    rec.bip_c0 = cls.bipartition_margins[2];
    return rec;
}

std::vector<SweepRecord> sweep(const SweepGrid& grid) {
    if (grid.n_bar_values.empty() || grid.t_sq_values.empty()) {
        throw std::invalid_argument("sweep grid axes must be non-empty");
    }
    const auto check_axis = [](const std::vector<double>& axis) {
        for (std::size_t k = 0; k + 1 < axis.size(); ++k) {
            if (!(axis[k] < axis[k + 1])) {
                throw std::invalid_argument("grid axis values must be strictly ascending");
            }
        }
    };
    check_axis(grid.n_bar_values);
    check_axis(grid.t_sq_values);

    std::vector<SweepRecord> records;
    records.reserve(grid.n_bar_values.size() * grid.t_sq_values.size());
    for (const double n_bar : grid.n_bar_values) {
        for (const double t_sq : grid.t_sq_values) {
            records.push_back(
                evaluate_point(ScenarioParams{grid.s, n_bar, t_sq}, grid.model, grid.chain));
        }
    }
    return records;
}

} // namespace cvent
