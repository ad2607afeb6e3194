#pragma once

#include <string>
#include <utility>
#include <vector>

#include "scatter1d/run_config.hpp"

namespace scatter1d {

// Uniform result container: numeric rows plus key/value metadata that
// both renderers emit (CSV as '# key=value' comments, JSON as a map).
struct ResultTable {
    Task task;
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    int validation_failures = 0;  // used by the validate task only
};

// Run the configured task and collect results. Throws ConfigError for
// task/config mismatches and the computational error types for runtime
// failures; validation shortfalls are counted, not thrown.
ResultTable execute_task(const RunConfig& cfg);

// Renderings are deterministic: fixed key order, %.17g numbers, LF
// line endings. Re-running an identical config yields identical bytes.
std::string render_csv(const RunConfig& cfg, const ResultTable& table);
std::string render_json(const RunConfig& cfg, const ResultTable& table);

// Execute, render, and write to cfg.output (stdout when the path is
// empty). Returns the process exit code: 0, or 1 when the validate
// task found failures.
int run_task(const RunConfig& cfg);

}  // namespace scatter1d
