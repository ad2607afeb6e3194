#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "scatter1d/errors.hpp"
#include "scatter1d/run_config.hpp"
#include "scatter1d/runner.hpp"

// Exit codes: 0 success, 1 validation failure, 2 configuration error,
// 3 computational error (instability, matching failure, pole, ...).
int main(int argc, char** argv) {
    CLI::App app{"1D two-channel scattering driver"};
    std::string task_arg;
    std::string config_path;
    std::string out_path;
    std::string format_arg;
    app.add_option("task", task_arg,
                   "phase_sweep | observables | effective_range | oracle | spectrum | validate");
    app.add_option("--config", config_path, "JSON run configuration")->required();
    app.add_option("--out", out_path, "output path (default: config output.path, else stdout)");
    app.add_option("--format", format_arg, "output format")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        scatter1d::RunConfig cfg = scatter1d::load_run_config(config_path);
        if (!task_arg.empty()) {
            const auto task = scatter1d::task_from_name(task_arg);
            if (!task) throw scatter1d::ConfigError("task", "unknown task '" + task_arg + "'");
            cfg.task = task;
        }
        if (!out_path.empty()) cfg.output.path = out_path;
        if (format_arg == "csv") cfg.output.format = scatter1d::OutFormat::csv;
        else if (format_arg == "json") cfg.output.format = scatter1d::OutFormat::json;
        cfg.hash = scatter1d::config_hash(cfg);
        return scatter1d::run_task(cfg);
    } catch (const scatter1d::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const scatter1d::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
