#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "cvent/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Gaussian-state decoherence and entanglement-structure classification"};
    app.require_subcommand(1);

    cvent::RunConfig config;
    std::string output;

    const std::map<std::string, cvent::SweepModel> model_map{
        {"collective", cvent::SweepModel::Collective},
        {"chain", cvent::SweepModel::Chain},
        {"closed", cvent::SweepModel::ClosedForm}};
    const std::map<std::string, cvent::OutputFormat> format_map{
        {"csv", cvent::OutputFormat::Csv}, {"json", cvent::OutputFormat::Json}};

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", config.format, "output format (csv|json)")
            ->transform(CLI::CheckedTransformer(format_map, CLI::ignore_case));
        cmd->add_option("-o,--output", output, "write to a file instead of standard output");
    };
    const auto add_point = [&](CLI::App* cmd) {
        cmd->add_option("--s", config.s, "squeezing parameter");
        cmd->add_option("--nbar", config.n_bar, "environment mean thermal photon number");
        cmd->add_option("--tsq", config.t_sq, "energy transmittivity t^2 in [0, 1]");
    };
    const auto add_model = [&](CLI::App* cmd) {
        cmd->add_option("--model", config.model, "dynamical model (collective|chain|closed)")
            ->transform(CLI::CheckedTransformer(model_map, CLI::ignore_case));
        cmd->add_option("--chain", config.chain_n, "beam splitters in the chain model");
    };

    CLI::App* classify = app.add_subcommand(
        "classify", "entanglement structure of one (s, nbar, tsq) scenario");
    add_point(classify);
    add_model(classify);
    add_common(classify);

    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "classify a grid in the (nbar, tsq) plane");
    sweep_cmd->add_option("--s", config.s, "squeezing parameter");
    sweep_cmd->add_option("--nbar-min", config.n_bar_min, "grid lower nbar");
    sweep_cmd->add_option("--nbar-max", config.n_bar_max, "grid upper nbar");
    sweep_cmd->add_option("--nbar-count", config.n_bar_count, "grid points along nbar");
    sweep_cmd->add_option("--tsq-min", config.t_sq_min, "grid lower tsq");
    sweep_cmd->add_option("--tsq-max", config.t_sq_max, "grid upper tsq");
    sweep_cmd->add_option("--tsq-count", config.t_sq_count, "grid points along tsq");
    add_model(sweep_cmd);
    add_common(sweep_cmd);

    CLI::App* thresholds =
        app.add_subcommand("thresholds", "analytic critical transmittivities at nbar");
    thresholds->add_option("--nbar", config.n_bar, "environment mean thermal photon number");
    add_common(thresholds);

    CLI::App* crosscheck = app.add_subcommand(
        "crosscheck", "entrywise agreement of the closed-form, collective, chain and ODE models");
    add_point(crosscheck);
    crosscheck->add_option("--chain", config.chain_n, "beam splitters in the chain model");
    crosscheck->add_option("--samples", config.samples,
                           "additional random parameter points to check");
    crosscheck->add_option("--seed", config.seed, "seed for the random parameter points");
    add_common(crosscheck);

    CLI::App* purify =
        app.add_subcommand("purify", "purified-environment diagnostics and hidden-mode boundary");
    add_point(purify);
    add_common(purify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (classify->parsed()) {
        config.command = cvent::Command::Classify;
    } else if (sweep_cmd->parsed()) {
        config.command = cvent::Command::Sweep;
    } else if (thresholds->parsed()) {
        config.command = cvent::Command::Thresholds;
    } else if (crosscheck->parsed()) {
        config.command = cvent::Command::Crosscheck;
    } else {
        config.command = cvent::Command::Purify;
    }
    if (!output.empty()) {
        config.output_path = output;
    }
    return cvent::run(config, std::cout, std::cerr);
}
