#include "scatter1d/run_config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "scatter1d/errors.hpp"
#include "scatter1d/numerics.hpp"

namespace scatter1d {

using json = nlohmann::ordered_json;

std::vector<double> KGridSpec::points() const {
    std::vector<double> k(static_cast<std::size_t>(count));
    const double n1 = static_cast<double>(count - 1);
    for (int j = 0; j < count; ++j) {
        const double s = static_cast<double>(j) / n1;
        switch (spacing) {
            case Spacing::linear:
                k[j] = min + (max - min) * s;
                break;
            case Spacing::log:
                k[j] = min * std::exp(std::log(max / min) * s);
                break;
            case Spacing::k_squared:
                k[j] = std::sqrt(min * min + (max * max - min * min) * s);
                break;
        }
    }
    k.front() = min;
    k.back() = max;
    return k;
}

const char* task_name(Task t) {
    switch (t) {
        case Task::phase_sweep: return "phase_sweep";
        case Task::observables: return "observables";
        case Task::effective_range: return "effective_range";
        case Task::oracle: return "oracle";
        case Task::spectrum: return "spectrum";
        case Task::validate: return "validate";
    }
    return "?";
}

std::optional<Task> task_from_name(const std::string& name) {
    for (Task t : {Task::phase_sweep, Task::observables, Task::effective_range,
                   Task::oracle, Task::spectrum, Task::validate}) {
        if (name == task_name(t)) return t;
    }
    return std::nullopt;
}

namespace {

double require_number(const json& j, const char* path) {
    if (!j.is_number()) throw ConfigError(path, "expected a number");
    return j.get<double>();
}

double require_finite(const json& j, const char* path) {
    const double v = require_number(j, path);
    if (!std::isfinite(v)) throw ConfigError(path, "must be finite");
    return v;
}

std::string require_string(const json& j, const char* path) {
    if (!j.is_string()) throw ConfigError(path, "expected a string");
    return j.get<std::string>();
}

const json& require_field(const json& obj, const char* key, const char* path) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ConfigError(path, "missing required field");
    return *it;
}

PotentialSpec parse_potential(const json& j) {
    if (!j.is_object()) throw ConfigError("potential", "expected an object");
    const std::string kind =
        require_string(require_field(j, "kind", "potential.kind"), "potential.kind");
    if (kind == "square_well") {
        const double beta0 =
            require_finite(require_field(j, "beta0", "potential.beta0"), "potential.beta0");
        const double R = require_finite(require_field(j, "R", "potential.R"), "potential.R");
        if (beta0 <= 0.0) throw ConfigError("potential.beta0", "must be positive");
        if (R <= 0.0) throw ConfigError("potential.R", "must be positive");
        return make_square_well(beta0, R);
    }
    if (kind == "tabulated") {
        const json& jn = require_field(j, "nodes", "potential.nodes");
        if (!jn.is_array() || jn.size() < 2)
            throw ConfigError("potential.nodes", "expected an array of at least 2 [x, U] pairs");
        std::vector<std::array<double, 2>> nodes;
        nodes.reserve(jn.size());
        for (std::size_t i = 0; i < jn.size(); ++i) {
            const json& row = jn[i];
            if (!row.is_array() || row.size() != 2)
                throw ConfigError("potential.nodes", "each node must be an [x, U] pair");
            nodes.push_back({require_finite(row[0], "potential.nodes"),
                             require_finite(row[1], "potential.nodes")});
        }
        return make_tabulated(nodes);
    }
    throw ConfigError("potential.kind", "unknown kind '" + kind +
                                            "' (expected square_well or tabulated)");
}

KGridSpec parse_k_grid(const json& j) {
    if (!j.is_object()) throw ConfigError("k_grid", "expected an object");
    KGridSpec g;
    g.min = require_finite(require_field(j, "min", "k_grid.min"), "k_grid.min");
    g.max = require_finite(require_field(j, "max", "k_grid.max"), "k_grid.max");
    const json& jc = require_field(j, "count", "k_grid.count");
    if (!jc.is_number_integer()) throw ConfigError("k_grid.count", "expected an integer");
    g.count = jc.get<int>();
    if (g.min <= 0.0) throw ConfigError("k_grid.min", "must be positive");
    if (g.max <= g.min) throw ConfigError("k_grid.max", "must exceed k_grid.min");
    if (g.count < 2) throw ConfigError("k_grid.count", "must be at least 2");
    if (auto it = j.find("spacing"); it != j.end()) {
        const std::string s = require_string(*it, "k_grid.spacing");
        if (s == "linear") g.spacing = Spacing::linear;
        else if (s == "log") g.spacing = Spacing::log;
        else if (s == "k_squared") g.spacing = Spacing::k_squared;
        else
            throw ConfigError("k_grid.spacing",
                              "unknown spacing '" + s + "' (expected linear, log, or k_squared)");
    }
    return g;
}

SolverParams parse_solver(const json& j) {
    SolverParams p;
    if (j.is_null()) return p;
    if (!j.is_object()) throw ConfigError("solver", "expected an object");
    if (auto it = j.find("h"); it != j.end()) {
        p.h = require_finite(*it, "solver.h");
        if (p.h <= 0.0) throw ConfigError("solver.h", "must be positive");
    }
    if (auto it = j.find("x_max_margin"); it != j.end()) {
        p.x_max_margin = require_finite(*it, "solver.x_max_margin");
        if (p.x_max_margin <= 0.0) throw ConfigError("solver.x_max_margin", "must be positive");
    }
    return p;
}

OutputSpec parse_output(const json& j) {
    OutputSpec o;
    if (j.is_null()) return o;
    if (!j.is_object()) throw ConfigError("output", "expected an object");
    if (auto it = j.find("path"); it != j.end()) o.path = require_string(*it, "output.path");
    if (auto it = j.find("format"); it != j.end()) {
        const std::string f = require_string(*it, "output.format");
        if (f == "csv") o.format = OutFormat::csv;
        else if (f == "json") o.format = OutFormat::json;
        else throw ConfigError("output.format", "unknown format '" + f + "' (expected csv or json)");
    }
    return o;
}

// Canonical form: fixed key order, doubles as shortest round-trip
// decimals (nlohmann's default). Two configs that parse to the same
// values always hash identically. The output block is deliberately
// left out: the hash identifies the computation, and the same run
// sent to two destinations must produce byte-identical tables.
std::string canonical_text(const RunConfig& c) {
    json out;
    out["task"] = c.task ? json(task_name(*c.task)) : json(nullptr);
    json pot;
    if (const auto* sw = std::get_if<SquareWell>(&c.potential.kind)) {
        pot["kind"] = "square_well";
        pot["beta0"] = sw->beta0;
        pot["R"] = sw->R;
    } else if (const auto* tab = std::get_if<Tabulated>(&c.potential.kind)) {
        pot["kind"] = "tabulated";
        json nodes = json::array();
        for (const auto& nd : tab->nodes) nodes.push_back({nd[0], nd[1]});
        pot["nodes"] = std::move(nodes);
    } else {
        pot["kind"] = "analytic_windowed";
        pot["R"] = c.potential.effective_range_R;
    }
    out["potential"] = std::move(pot);
    out["k_grid"] = {{"min", c.k_grid.min},
                     {"max", c.k_grid.max},
                     {"count", c.k_grid.count},
                     {"spacing", c.k_grid.spacing == Spacing::linear      ? "linear"
                                 : c.k_grid.spacing == Spacing::log      ? "log"
                                                                         : "k_squared"}};
    out["solver"] = {{"h", c.solver.h}, {"x_max_margin", c.solver.x_max_margin}};
    out["channel"] = c.channel ? json(channel_index(*c.channel)) : json(nullptr);
    return out.dump();
}

}  // namespace

std::uint64_t config_hash(const RunConfig& cfg) { return fnv1a64(canonical_text(cfg)); }

RunConfig parse_run_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError("json", e.what());
    }
    if (!j.is_object()) throw ConfigError("json", "top level must be an object");

    RunConfig c;
    c.potential = parse_potential(require_field(j, "potential", "potential"));
    c.k_grid = parse_k_grid(require_field(j, "k_grid", "k_grid"));
    if (auto it = j.find("task"); it != j.end() && !it->is_null()) {
        const std::string name = require_string(*it, "task");
        c.task = task_from_name(name);
        if (!c.task) throw ConfigError("task", "unknown task '" + name + "'");
    }
    c.solver = parse_solver(j.value("solver", json(nullptr)));
    c.output = parse_output(j.value("output", json(nullptr)));
    if (auto it = j.find("channel"); it != j.end() && !it->is_null()) {
        if (!it->is_number_integer()) throw ConfigError("channel", "expected 0 or 1");
        const int L = it->get<int>();
        if (L != 0 && L != 1) throw ConfigError("channel", "expected 0 or 1");
        c.channel = (L == 0) ? Channel::even : Channel::odd;
    }
    c.hash = config_hash(c);
    return c;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("config", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_run_config(ss.str());
}

}  // namespace scatter1d
