/**
 * @file dmp_main.cpp
 * @brief CLI entry point: spectrum, check, solve, deform, oracle.
 *
 * Exit codes: 0 completed run (recorded verdict failures included),
 * 1 configuration error, 2 runtime error.
 */

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dmp/commands.hpp"
#include "dmp/config.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<int> ensemble;
    std::optional<double> eps;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool config_required) {
    auto* opt = cmd->add_option("--config", args.config_path, "JSON problem config");
    if (config_required) opt->required();
    cmd->add_option("--seed", args.seed, "override the config seed");
    cmd->add_option("--out", args.out, "override the output directory");
    cmd->add_option("--ensemble", args.ensemble, "override the solver ensemble size");
    cmd->add_option("--eps", args.eps, "override the solver epsilon");
}

dmp::ProblemConfig resolve(const CommonArgs& args) {
    dmp::ProblemConfig config = dmp::load_config_file(args.config_path);
    if (args.seed) config.seed = *args.seed;
    if (args.out) config.output.dir = *args.out;
    if (args.ensemble) config.solver.ensemble = *args.ensemble;
    if (args.eps) config.solver.eps = *args.eps;
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"periodic solutions of second-order difference systems via "
                 "constrained path minimax, with a deformation-flow verdict harness"};
    app.require_subcommand(1);

    // spectrum takes M directly; everything else runs off a config file.
    int spectrum_m = 6;
    std::string spectrum_out = "out";
    auto* spectrum = app.add_subcommand("spectrum", "ring Laplacian spectrum for a period");
    spectrum->add_option("--m", spectrum_m, "period M (>= 3)")->required();
    spectrum->add_option("--out", spectrum_out, "output directory");

    CommonArgs check_args, solve_args, deform_args, oracle_args;
    auto* check = app.add_subcommand("check", "potential hypothesis checks");
    add_common(check, check_args, true);
    auto* solve = app.add_subcommand("solve", "mountain-pass solve, refine, and catalog match");
    add_common(solve, solve_args, true);
    auto* deform = app.add_subcommand("deform", "deformation-flow verdict harness");
    add_common(deform, deform_args, true);
    auto* oracle = app.add_subcommand("oracle", "multistart solution catalog");
    add_common(oracle, oracle_args, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (spectrum->parsed()) return dmp::cmd_spectrum(spectrum_m, spectrum_out);
        if (check->parsed()) return dmp::cmd_check(resolve(check_args));
        if (solve->parsed()) return dmp::cmd_solve(resolve(solve_args));
        if (deform->parsed()) return dmp::cmd_deform(resolve(deform_args));
        if (oracle->parsed()) return dmp::cmd_oracle(resolve(oracle_args));
    } catch (const dmp::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
