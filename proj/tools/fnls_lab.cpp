// Scenario runner for the fractional NLS lab: solves ground states, evolves
// radial data and emits the diagnostic reports described in the README.

#include <CLI11.hpp>

#include "fnls/scenario.hpp"

int main(int argc, char** argv) {
    CLI::App app{"fractional NLS laboratory"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "run a scenario config");
    std::string config_path;
    fnls::RunOptions options;
    run->add_option("config", config_path, "scenario JSON document")->required();
    run->add_option("--out", options.out_dir, "output directory (default: .)");
    run->add_option("--seed", options.seed, "seed for randomized checks");
    run->add_flag("--quiet", options.quiet, "suppress progress output");
    run->add_option("--jobs", options.jobs, "parallel workers for sweep configs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }
    return fnls::run_scenario_file(config_path, options);
}
