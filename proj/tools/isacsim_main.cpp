#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "isacsim/cli.hpp"
#include "isacsim/config.hpp"
#include "isacsim/errors.hpp"

namespace {

struct CommonOpts {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_dir;
    std::optional<std::string> fidelity;
    int threads = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "experiment config file (JSON with unit suffixes)");
    cmd->add_option("--seed", opts.seed, "override the random seed");
    cmd->add_option("--out", opts.out_dir, "output directory");
    cmd->add_option("--fidelity", opts.fidelity,
                    "simulation fidelity: assumption_matched | full");
    cmd->add_option("--threads", opts.threads, "worker threads (0 = hardware)");
}

isacsim::ExperimentConfig resolve(const CommonOpts& opts) {
    isacsim::ExperimentConfig cfg = opts.config_path.empty()
                                        ? isacsim::default_config()
                                        : isacsim::load_config(opts.config_path);
    if (opts.seed) cfg.seed = *opts.seed;
    if (opts.out_dir) cfg.output_dir = *opts.out_dir;
    if (opts.fidelity) {
        if (*opts.fidelity == "assumption_matched")
            cfg.fidelity = isacsim::Fidelity::kAssumptionMatched;
        else if (*opts.fidelity == "full")
            cfg.fidelity = isacsim::Fidelity::kFull;
        else
            throw isacsim::ConfigError("--fidelity must be assumption_matched or full");
    }
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"isacsim: sensing-coverage and dynamic-ranging-rate toolkit"};
    app.require_subcommand(1);

    CommonOpts cov_opts, sweep_opts, val_opts;
    CLI::App* cov = app.add_subcommand("coverage", "emit sensing-boundary CSV/SVG for the configured cases");
    add_common(cov, cov_opts);
    CLI::App* sweep = app.add_subcommand("drr-sweep", "sweep a parameter and compare analytic vs simulated DRR");
    add_common(sweep, sweep_opts);
    CLI::App* val = app.add_subcommand("validate", "run the acceptance suite and report pass/fail per criterion");
    add_common(val, val_opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cov->parsed()) return isacsim::cmd_coverage(resolve(cov_opts));
        if (sweep->parsed()) return isacsim::cmd_drr_sweep(resolve(sweep_opts), sweep_opts.threads);
        if (val->parsed()) return isacsim::cmd_validate(resolve(val_opts), val_opts.threads);
    } catch (const isacsim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const isacsim::ModelValidityError& e) {
        std::cerr << "model validity error: " << e.what() << "\n";
        return 2;
    } catch (const isacsim::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
