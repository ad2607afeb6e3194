#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scatter1d/potential.hpp"
#include "scatter1d/radial_solver.hpp"

namespace scatter1d {

enum class Task {
    phase_sweep,
    observables,
    effective_range,
    oracle,
    spectrum,
    validate
};

enum class Spacing { linear, log, k_squared };
enum class OutFormat { csv, json };

struct KGridSpec {
    double min = 0.0;
    double max = 0.0;
    int count = 0;
    Spacing spacing = Spacing::linear;

    std::vector<double> points() const;
};

struct OutputSpec {
    std::string path;  // empty -> stdout
    OutFormat format = OutFormat::csv;
};

struct RunConfig {
    PotentialSpec potential;
    std::optional<Task> task;
    KGridSpec k_grid;
    SolverParams solver;
    OutputSpec output;
    std::optional<Channel> channel;
    std::uint64_t hash = 0;  // FNV-1a of the canonical serialization
};

const char* task_name(Task t);
std::optional<Task> task_from_name(const std::string& name);

// Hash of the canonical re-serialization (fixed key order, value-only),
// so formatting and key order of the source JSON do not affect it.
// Recompute after mutating a parsed config (e.g. CLI overrides).
std::uint64_t config_hash(const RunConfig& cfg);

// Parse and validate a JSON run configuration. Violations raise
// ConfigError carrying the dotted field path.
RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config(const std::string& path);

}  // namespace scatter1d
