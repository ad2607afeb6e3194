#include "scatter1d/runner.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <variant>

#include "json.hpp"

#include "scatter1d/effective_range.hpp"
#include "scatter1d/errors.hpp"
#include "scatter1d/observables.hpp"
#include "scatter1d/spectrum.hpp"
#include "scatter1d/square_well.hpp"

namespace scatter1d {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_hash(std::uint64_t h) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "0x%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void add_common_meta(const RunConfig& cfg, ResultTable& t) {
    if (const auto* sw = std::get_if<SquareWell>(&cfg.potential.kind)) {
        t.meta.emplace_back("potential", "square_well");
        t.meta.emplace_back("beta0", fmt(sw->beta0));
    } else if (std::holds_alternative<Tabulated>(cfg.potential.kind)) {
        t.meta.emplace_back("potential", "tabulated");
    } else {
        t.meta.emplace_back("potential", "analytic_windowed");
    }
    t.meta.emplace_back("R", fmt(cfg.potential.effective_range_R));
    t.meta.emplace_back("h", fmt(cfg.solver.h));
}

SquareWellParams require_square_well(const RunConfig& cfg, const char* task) {
    const auto* sw = std::get_if<SquareWell>(&cfg.potential.kind);
    if (!sw)
        throw ConfigError("potential.kind",
                          std::string(task) + " requires a square_well potential");
    return SquareWellParams{sw->beta0, sw->R};
}

ResultTable run_phase_sweep(const RunConfig& cfg) {
    if (!cfg.channel)
        throw ConfigError("channel", "phase_sweep requires channel (0 or 1)");
    ResultTable t{Task::phase_sweep, {}, {"k", "delta", "branch_offset"}, {}, 0};
    add_common_meta(cfg, t);
    t.meta.emplace_back("channel", std::to_string(channel_index(*cfg.channel)));
    const auto records =
        sweep_phase_shifts(cfg.potential, *cfg.channel, cfg.k_grid.points(), cfg.solver);
    for (const auto& rec : records)
        t.rows.push_back({rec.k, rec.delta, static_cast<double>(rec.branch_offset)});
    return t;
}

ResultTable run_observables(const RunConfig& cfg) {
    ResultTable t{Task::observables,
                  {},
                  {"k", "delta0", "delta1", "sigma_plus", "sigma_minus", "sigma_tot",
                   "T2", "R2", "optical_residual"},
                  {},
                  0};
    add_common_meta(cfg, t);
    const auto grid = cfg.k_grid.points();
    const auto even = sweep_phase_shifts(cfg.potential, Channel::even, grid, cfg.solver);
    const auto odd = sweep_phase_shifts(cfg.potential, Channel::odd, grid, cfg.solver);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto a = amplitudes_from_phase_shifts(grid[i], even[i].delta, odd[i].delta);
        t.rows.push_back({a.k, a.delta0, a.delta1, a.sigma_plus, a.sigma_minus,
                          a.sigma_tot, std::norm(a.T_coef), std::norm(a.R_coef),
                          optical_theorem_residual(a)});
    }
    return t;
}

void append_er_row(ResultTable& t, const EffectiveRangeParams& p) {
    const double method = (p.method == ERMethod::low_k_fit) ? 0.0
                          : (p.method == ERMethod::integral) ? 1.0
                                                             : 2.0;
    std::vector<double> row{static_cast<double>(channel_index(p.channel)),
                            method,
                            p.a,
                            p.inv_a,
                            p.r,
                            p.near_threshold ? 1.0 : 0.0,
                            kNaN,
                            kNaN,
                            kNaN,
                            kNaN,
                            kNaN};
    if (p.fit) {
        row[6] = p.fit->k_min;
        row[7] = p.fit->k_max;
        row[8] = static_cast<double>(p.fit->n_points);
        row[9] = p.fit->residual_norm;
        row[10] = p.fit->condition;
    }
    t.rows.push_back(std::move(row));
}

ResultTable run_effective_range(const RunConfig& cfg) {
    ResultTable t{Task::effective_range,
                  {},
                  {"L", "method", "a", "inv_a", "r", "near_threshold", "k_min",
                   "k_max", "n_points", "residual_norm", "condition"},
                  {},
                  0};
    add_common_meta(cfg, t);
    t.meta.emplace_back("method_codes", "0=low_k_fit 1=integral 2=oracle");
    const auto grid = cfg.k_grid.points();
    std::vector<Channel> channels;
    if (cfg.channel) channels.push_back(*cfg.channel);
    else channels = {Channel::even, Channel::odd};
    for (Channel ch : channels) {
        const auto fit = fit_effective_range(cfg.potential, ch, grid, cfg.solver);
        append_er_row(t, fit);
        const std::string tag = "integral_L" + std::to_string(channel_index(ch));
        if (fit.near_threshold || fit.a == 0.0 || !std::isfinite(fit.a)) {
            t.meta.emplace_back(tag, "skipped: scattering length degenerate or at threshold");
            continue;
        }
        const auto pair = zero_energy_solution(cfg.potential, ch, cfg.solver, fit.a);
        append_er_row(t, integral_effective_range(pair, ch));
    }
    return t;
}

ResultTable run_oracle(const RunConfig& cfg) {
    const SquareWellParams well = require_square_well(cfg, "oracle");
    ResultTable t{Task::oracle, {}, {"k", "delta0", "delta1"}, {}, 0};
    add_common_meta(cfg, t);
    for (Channel ch : {Channel::even, Channel::odd}) {
        const std::string L = std::to_string(channel_index(ch));
        const auto p = scattering_params(well, ch);
        t.meta.emplace_back("a" + L, fmt(p.a));
        t.meta.emplace_back("inv_a" + L, fmt(p.inv_a));
        t.meta.emplace_back("r" + L, fmt(p.r));
        t.meta.emplace_back("near_threshold" + L, p.near_threshold ? "1" : "0");
        try {
            t.meta.emplace_back("n_bound" + L, std::to_string(bound_state_count(well, ch)));
        } catch (const ThresholdError&) {
            t.meta.emplace_back("n_bound" + L, "threshold");
        }
    }
    for (double k : cfg.k_grid.points())
        t.rows.push_back({k, phase_shift(well, Channel::even, k),
                          phase_shift(well, Channel::odd, k)});
    return t;
}

ResultTable run_spectrum(const RunConfig& cfg) {
    ResultTable t{Task::spectrum,
                  {},
                  {"L", "n_bound", "method", "levinson_residual"},
                  {},
                  0};
    add_common_meta(cfg, t);
    t.meta.emplace_back("method_codes", "0=node_count 1=levinson");
    for (Channel ch : {Channel::even, Channel::odd}) {
        const auto rep = count_bound_states_nodes(cfg.potential, ch, cfg.solver);
        t.rows.push_back({static_cast<double>(channel_index(ch)),
                          static_cast<double>(rep.n_bound), 0.0, kNaN});
    }
    const double R = cfg.potential.effective_range_R;
    if (cfg.k_grid.min * R > 0.01 || cfg.k_grid.max * R < 50.0) {
        t.meta.emplace_back("levinson",
                            "skipped: k grid must reach k_min*R <= 0.01 and k_max*R >= 50");
        return t;
    }
    const auto grid = cfg.k_grid.points();
    try {
        const auto odd = sweep_phase_shifts(cfg.potential, Channel::odd, grid, cfg.solver);
        const auto rep = levinson_check(odd, R);
        t.rows.push_back({1.0, static_cast<double>(rep.n_bound), 1.0,
                          rep.levinson_residual});
    } catch (const Error& e) {
        t.meta.emplace_back("levinson_odd", std::string("failed: ") + e.what());
    }
    // The even channel's zero-energy phase sits at half-odd multiples of
    // pi, so its sweep difference is reported as measured rather than
    // forced through the integer check.
    try {
        const auto even = sweep_phase_shifts(cfg.potential, Channel::even, grid, cfg.solver);
        const double diff = even.front().delta - even.back().delta;
        t.meta.emplace_back("levinson_even_difference_rad", fmt(diff));
        t.meta.emplace_back("levinson_even_difference_over_pi", fmt(diff / M_PI));
    } catch (const Error& e) {
        t.meta.emplace_back("levinson_even", std::string("failed: ") + e.what());
    }
    return t;
}

ResultTable run_validate(const RunConfig& cfg) {
    const SquareWellParams well = require_square_well(cfg, "validate");
    ResultTable t{Task::validate, {}, {"check", "L", "value", "tolerance", "pass"}, {}, 0};
    add_common_meta(cfg, t);
    t.meta.emplace_back("check_codes",
                        "0=max_phase_dev_mod_pi 1=fit_a_rel 2=fit_r_rel "
                        "3=integral_r_rel 4=node_count_abs_diff");
    auto push_check = [&t](int check, Channel ch, double value, double tol) {
        const bool ok = value <= tol;
        if (!ok) ++t.validation_failures;
        t.rows.push_back({static_cast<double>(check),
                          static_cast<double>(channel_index(ch)), value, tol,
                          ok ? 1.0 : 0.0});
    };

    const auto grid = cfg.k_grid.points();
    for (Channel ch : {Channel::even, Channel::odd}) {
        const auto sweep = sweep_phase_shifts(cfg.potential, ch, grid, cfg.solver);
        double max_dev = 0.0;
        for (const auto& rec : sweep) {
            const double exact = phase_shift(well, ch, rec.k);
            max_dev = std::max(max_dev, std::abs(std::remainder(rec.delta - exact, M_PI)));
        }
        push_check(0, ch, max_dev, 1e-6);

        const auto oracle = scattering_params(well, ch);
        const auto fit_grid = default_fit_grid(well.R, 0.15);
        const auto fit = fit_effective_range(cfg.potential, ch, fit_grid, cfg.solver);
        if (oracle.near_threshold) {
            push_check(1, ch, std::abs(fit.inv_a - oracle.inv_a), 1e-4);
        } else {
            push_check(1, ch, std::abs(fit.a - oracle.a) / std::abs(oracle.a), 1e-4);
        }
        const double r_scale = std::max(std::abs(oracle.r), 1e-9);
        push_check(2, ch, std::abs(fit.r - oracle.r) / r_scale, 1e-4);

        if (!oracle.near_threshold) {
            const auto pair = zero_energy_solution(cfg.potential, ch, cfg.solver, oracle.a);
            const auto integ = integral_effective_range(pair, ch);
            push_check(3, ch, std::abs(integ.r - oracle.r) / r_scale, 1e-6);
        } else {
            t.meta.emplace_back("integral_L" + std::to_string(channel_index(ch)),
                                "skipped: at threshold");
        }

        try {
            const int exact_n = bound_state_count(well, ch);
            const auto rep = count_bound_states_nodes(cfg.potential, ch, cfg.solver);
            push_check(4, ch, std::abs(rep.n_bound - exact_n), 0.0);
        } catch (const ThresholdError&) {
            t.meta.emplace_back("nodes_L" + std::to_string(channel_index(ch)),
                                "skipped: at threshold");
        }
    }
    t.meta.emplace_back("failures", std::to_string(t.validation_failures));
    return t;
}

}  // namespace

ResultTable execute_task(const RunConfig& cfg) {
    if (!cfg.task) throw ConfigError("task", "no task given (config field or CLI argument)");
    switch (*cfg.task) {
        case Task::phase_sweep: return run_phase_sweep(cfg);
        case Task::observables: return run_observables(cfg);
        case Task::effective_range: return run_effective_range(cfg);
        case Task::oracle: return run_oracle(cfg);
        case Task::spectrum: return run_spectrum(cfg);
        case Task::validate: return run_validate(cfg);
    }
    throw ConfigError("task", "unknown task");
}

std::string render_csv(const RunConfig& cfg, const ResultTable& table) {
    std::string out;
    out += "# scatter1d ";
    out += task_name(table.task);
    out += "\n# config_hash=";
    out += fmt_hash(cfg.hash);
    out += "\n";
    for (const auto& [key, value] : table.meta) {
        out += "# ";
        out += key;
        out += "=";
        out += value;
        out += "\n";
    }
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out += ",";
        out += table.columns[c];
    }
    out += "\n";
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ",";
            out += fmt(row[c]);
        }
        out += "\n";
    }
    return out;
}

std::string render_json(const RunConfig& cfg, const ResultTable& table) {
    nlohmann::ordered_json j;
    j["task"] = task_name(table.task);
    j["config_hash"] = fmt_hash(cfg.hash);
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [key, value] : table.meta) meta[key] = value;
    j["meta"] = std::move(meta);
    j["columns"] = table.columns;
    j["rows"] = table.rows;
    return j.dump(2) + "\n";
}

int run_task(const RunConfig& cfg) {
    const ResultTable table = execute_task(cfg);
    const std::string text = (cfg.output.format == OutFormat::csv)
                                 ? render_csv(cfg, table)
                                 : render_json(cfg, table);
    if (cfg.output.path.empty()) {
        std::cout << text;
        std::cout.flush();
    } else {
        std::ofstream out(cfg.output.path, std::ios::binary);
        if (!out) throw ConfigError("output.path", "cannot open '" + cfg.output.path + "'");
        out << text;
        if (!out) throw ConfigError("output.path", "write failed for '" + cfg.output.path + "'");
    }
    return table.validation_failures > 0 ? 1 : 0;
}

}  // namespace scatter1d
