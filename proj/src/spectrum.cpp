#include "scatter1d/spectrum.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "scatter1d/errors.hpp"

namespace scatter1d {

SpectrumReport count_bound_states_nodes(const PotentialSpec& spec,
                                        Channel channel,
                                        const SolverParams& params) {
    auto sol = integrate_radial(spec, channel, 0.0, params.h,
                                default_x_max(spec, 0.0, params.x_max_margin));

    double u_scale = 0.0;
    for (std::size_t i = 0; i <= sol.i_R; ++i)
        u_scale = std::max(u_scale, std::abs(sol.u[i]));

    if (std::abs(sol.u_R) < 1e-12 * u_scale)
        throw GridError(
            "zero-energy solution has a node at the range boundary; refine the "
            "grid or perturb the potential");

    int interior = 0;
    double prev = 0.0;
    // The parity zero at the origin of the odd channel is not a node.
    for (std::size_t i = channel == Channel::odd ? 1 : 0; i <= sol.i_R; ++i) {
        double v = sol.u[i];
        if (v == 0.0) continue;
        if (prev != 0.0 && std::signbit(v) != std::signbit(prev)) ++interior;
        prev = v;
    }

    if (std::abs(sol.du_R) * sol.effective_range_R < 1e-12 * u_scale)
        throw ThresholdError(
            "zero-energy solution is flat beyond the range: bound state "
            "exactly at threshold");
    const int exterior = sol.u_R * sol.du_R < 0.0 ? 1 : 0;

    return {channel, interior + exterior, SpectrumMethod::node_count,
            std::numeric_limits<double>::quiet_NaN()};
}

SpectrumReport levinson_check(const std::vector<PhaseShiftRecord>& records,
                              double effective_range_R) {
    if (records.size() < 2)
        throw DomainError("levinson_check needs an unwrapped sweep");
    const auto& lo = records.front();
    const auto& hi = records.back();
    if (lo.k * effective_range_R > 0.01)
        throw GridError("sweep starts too high: k_min*R=" +
                        std::to_string(lo.k * effective_range_R) + " > 0.01");
    if (hi.k * effective_range_R < 50.0)
        throw GridError("sweep ends too low: k_max*R=" +
                        std::to_string(hi.k * effective_range_R) + " < 50");
    if (std::abs(hi.delta) >= 0.02)
        throw GridError("|delta(k_max)|=" + std::to_string(std::abs(hi.delta)) +
                        " >= 0.02: k_max is not yet an infinite-k proxy; "
                        "extend the sweep");

    const double diff = lo.delta - hi.delta;
    const long n = std::lround(diff / std::numbers::pi);
    const double residual = std::abs(diff - n * std::numbers::pi);
    if (n < 0)
        throw InconsistencyError("negative bound-state count from sweep");
    if (residual > 0.2)
        throw InconsistencyError(
            "phase-shift difference " + std::to_string(diff) +
            " is not an integer multiple of pi (residual " +
            std::to_string(residual) + ")");

    Channel channel = lo.L == 1 ? Channel::odd : Channel::even;
    return {channel, static_cast<int>(n), SpectrumMethod::levinson, residual};
}

}  // namespace scatter1d
