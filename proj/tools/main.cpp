#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "reldiff/config.hpp"
#include "reldiff/runner.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;

reldiff::RunConfig load_config(const std::string& path,
                               const std::vector<std::string>& overrides,
                               const std::string& output_dir) {
    reldiff::RunConfig cfg = reldiff::parse_config_file(path);
    for (const auto& o : overrides) reldiff::apply_override(cfg, o);
    if (!output_dir.empty()) {
        cfg.dir = output_dir;
    } else if (const char* env = std::getenv("RELDIFF_OUTPUT_DIR");
               env && *env && cfg.dir == "out") {
        cfg.dir = env;
    }
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Relaxed high-order schemes for nonlinear reaction-diffusion"};
    app.require_subcommand(1);

    std::string config_path, output_dir;
    std::vector<std::string> overrides;
    std::vector<int> grids;

    auto add_common = [&](CLI::App* cmd, bool need_config) {
        auto* opt = cmd->add_option("--config", config_path, "Config file path");
        if (need_config) opt->required();
        cmd->add_option("--output-dir", output_dir,
                        "Output directory (default: config [output] dir, or "
                        "RELDIFF_OUTPUT_DIR)");
        cmd->add_option("--override", overrides,
                        "Config override section.key=value (repeatable)");
    };

    auto* cmd_run = app.add_subcommand("run", "Execute one configured run");
    add_common(cmd_run, true);

    auto* cmd_conv =
        app.add_subcommand("converge", "Grid-refinement study against an exact solution");
    add_common(cmd_conv, true);
    cmd_conv->add_option("--grids", grids,
                         "Cell counts, ascending (default: config [output] grids)");

    auto* cmd_list = app.add_subcommand("list-problems", "List available problem ids");

    auto* cmd_check = app.add_subcommand("validate-config", "Parse and check a config");
    add_common(cmd_check, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_list->parsed()) {
            for (const auto& [id, desc] : reldiff::problem_catalog())
                std::cout << id << "\n    " << desc << "\n";
            return 0;
        }
        const reldiff::RunConfig cfg =
            load_config(config_path, overrides, output_dir);
        if (cmd_check->parsed()) {
            reldiff::validate_config(cfg);
            std::cout << "ok\n";
            return 0;
        }
        if (cmd_run->parsed()) {
            reldiff::RunResult res = reldiff::run(cfg);
            std::cout << res.status << "\n";
            return 0;
        }
        // converge
        std::vector<int> gs = grids.empty() ? cfg.grids : grids;
        reldiff::ConvergenceResult res = reldiff::convergence_study(cfg, gs);
        for (std::size_t i = 0; i < res.rows.size(); ++i) {
            std::cout << "m=" << res.rows[i].m << " L1=" << res.rows[i].l1;
            if (res.exact)
                std::cout << " rate=exact";
            else if (i > 0)
                std::cout << " rate=" << res.rate_l1[i - 1];
            std::cout << "\n";
        }
        return 0;
    } catch (const reldiff::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const reldiff::NumericalFailure& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}
