#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rhm/cli.hpp"
#include "rhm/parallel.hpp"
#include "rhm/version.hpp"

int main(int argc, char** argv) {
    using namespace rhm::cli;

    CLI::App app{"Projection-order selection for Gaussian sequence models"};
    app.set_version_flag("--version", rhm::kVersion);
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    std::string out_dir;
    bool rebuild = false;
    std::vector<std::string> assignments;

    app.add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
    auto* seed_opt = app.add_option("--seed", seed, "Seed for simulation and hull sampling");
    app.add_option("--threads", threads, "Worker threads (results do not depend on this)")
        ->check(CLI::PositiveNumber);
    auto* out_opt = app.add_option("--out", out_dir, "Output directory");
    app.add_flag("--rebuild", rebuild, "Rebuild the hull table even if cached");
    app.add_option("--set", assignments, "Override a config field, e.g. experiment.reps=2000");

    auto* hull_cmd = app.add_subcommand("hull", "Build (or fetch from cache) the penalty table");
    auto* select_cmd = app.add_subcommand("select", "Choose the projection order for a data file");
    std::string data_file;
    select_cmd->add_option("data", data_file, "CSV with columns k,y")->required();
    auto* bench_cmd = app.add_subcommand("bench", "Run the configured simulation experiment");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        if (threads > 0) rhm::set_worker_count(threads);
        Overrides ov;
        if (*seed_opt) ov.seed = seed;
        if (*out_opt) ov.out = out_dir;
        ov.rebuild = rebuild;
        ov.assignments = assignments;
        std::optional<std::filesystem::path> cfg_file;
        if (!config_path.empty()) cfg_file = config_path;
        const RunConfig cfg = load_config(cfg_file, ov);

        if (*hull_cmd) return cmd_hull(cfg, std::cout, std::cerr);
        if (*select_cmd) return cmd_select(cfg, data_file, std::cout, std::cerr);
        if (*bench_cmd) return cmd_bench(cfg, std::cout, std::cerr);
        return kConfigError;
    } catch (...) {
        return report_exception(std::cerr);
    }
}
