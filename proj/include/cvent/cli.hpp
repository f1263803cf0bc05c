#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "cvent/analysis.hpp"

namespace cvent {

enum class Command {
    Classify,   ///< one (s, n_bar, t_sq) point -> one record
    Sweep,      ///< grid of records
    Thresholds, ///< analytic critical t_sq values at n_bar
    Crosscheck, ///< entrywise agreement of the dynamical models
    Purify,     ///< purified-environment diagnostics and hidden-mode boundary
};

enum class OutputFormat { Csv, Json };

/// Parsed, validated CLI invocation. Grid fields apply to Sweep only;
/// `samples` draws extra random crosscheck points (0 = just the given point).
struct RunConfig {
    Command command = Command::Classify;

    double s = 1.0;
    double n_bar = 0.0;
    double t_sq = 0.5;

    double n_bar_min = 0.0;
    double n_bar_max = 4.0;
    std::size_t n_bar_count = 30;
    double t_sq_min = 0.0;
    double t_sq_max = 1.0;
    std::size_t t_sq_count = 30;

    SweepModel model = SweepModel::Collective;
    std::size_t chain_n = 100;

    OutputFormat format = OutputFormat::Json;
    std::optional<std::string> output_path; ///< nullopt = standard output

    std::uint64_t seed = 20260814;
    std::size_t samples = 0;
};

/// Executes the command, writing payload to `out` (or config.output_path) and
/// diagnostics to `err`. Returns 0 on success, 1 on invalid physics/parameter
/// values. Flag parsing (exit 2) lives in the binary, not here.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace cvent
