#include "scatter1d/radial_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "scatter1d/errors.hpp"
#include "scatter1d/numerics.hpp"

namespace scatter1d {
namespace {

constexpr double kPi = std::numbers::pi;

double wavelength_scale(double k) {
    return k > 0.0 ? std::max(1.0, 2.0 * kPi / k) : 1.0;
}

}  // namespace

double default_x_max(const PotentialSpec& spec, double k, double margin) {
    return spec.effective_range_R + margin * wavelength_scale(k);
}

RadialSolution integrate_radial(const PotentialSpec& spec, Channel channel,
                                double k, double h, double x_max) {
    const double R = spec.effective_range_R;
    if (k < 0.0) throw DomainError("integrate_radial requires k >= 0");
    if (!(h > 0.0)) throw DomainError("integrate_radial requires h > 0");
    if (!(x_max > R))
        throw DomainError("x_max=" + std::to_string(x_max) +
                          " does not reach beyond the potential range R=" +
                          std::to_string(R));

    // Round the step down so R is exactly the i_R-th grid point; a step
    // landing off the range boundary would cost the integrator an order.
    const std::size_t i_R = static_cast<std::size_t>(std::ceil(R / h - 1e-12));
    const double hh = R / static_cast<double>(i_R);
    const std::size_t n = i_R + static_cast<std::size_t>(
                                    std::ceil((x_max - R) / hh - 1e-12));

    RadialSolution sol;
    sol.channel = channel;
    sol.k = k;
    sol.h = hh;
    sol.effective_range_R = R;
    sol.i_R = i_R;
    sol.x.resize(n + 1);
    sol.u.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) sol.x[i] = hh * static_cast<double>(i);
    // Pin the boundary sample: hh*i_R can land an ulp past R, and the
    // potential evaluated there would read the exterior side of a jump.
    sol.x[i_R] = R;

    // t[i] = h^2 f(x_i)/12 with f = U - k^2; the recurrence is
    // (1 - t[i+1]) u[i+1] = (2 + 10 t[i]) u[i] - (1 - t[i-1]) u[i-1].
    std::vector<double> t(i_R + 1);
    double f_max = 0.0;
    for (std::size_t i = 0; i <= i_R; ++i) {
        double f = evaluate(spec, sol.x[i]) - k * k;
        f_max = std::max(f_max, std::abs(f));
        t[i] = hh * hh * f / 12.0;
    }
    if (hh * std::sqrt(f_max) > 0.5)
        throw StabilityError("step h=" + std::to_string(hh) +
                             " too coarse for local wave number sqrt|U-k^2|=" +
                             std::to_string(std::sqrt(f_max)));

    auto& u = sol.u;
    if (channel == Channel::odd) {
        u[0] = 0.0;
        u[1] = hh;  // slope normalization is arbitrary
    } else {
        // Even start: u(-h) = u(h) by parity; the recurrence applied at
        // i = 0 with the mirrored point gives the first step directly.
        u[0] = 1.0;
        u[1] = (1.0 + 5.0 * t[0]) * u[0] / (1.0 - t[1]);
    }
    for (std::size_t i = 1; i < i_R; ++i)
        u[i + 1] = ((2.0 + 10.0 * t[i]) * u[i] - (1.0 - t[i - 1]) * u[i - 1]) /
                   (1.0 - t[i + 1]);

    sol.u_R = u[i_R];
    sol.du_R = deriv5_backward(u, i_R, hh);

    // Beyond R the equation is free; continue with the exact solution of
    // the matched value and slope instead of stepping across the
    // potential edge (a single step across the jump would contaminate
    // the phase at O(h) through the growing independent solution).
    if (k > 0.0) {
        const double c = sol.u_R, s = sol.du_R / k;
        for (std::size_t i = i_R + 1; i <= n; ++i) {
            double ph = k * (sol.x[i] - R);
            u[i] = c * std::cos(ph) + s * std::sin(ph);
        }
    } else {
        for (std::size_t i = i_R + 1; i <= n; ++i)
            u[i] = sol.u_R + sol.du_R * (sol.x[i] - R);
    }
    return sol;
}

namespace {

// Matched phase at one grid index: phi = k*x_m + delta modulo pi.
double matched_phase(const RadialSolution& sol, std::size_t j) {
    double um = sol.u[j];
    double dum = deriv5_centered(sol.u, j, sol.h);
    double phi = sol.channel == Channel::odd
                     ? std::atan2(sol.k * um, dum)
                     : std::atan2(-dum, sol.k * um);
    return reduce_mod_pi(phi - sol.k * sol.x[j]);
}

}  // namespace

PhaseShiftRecord extract_phase_shift(const RadialSolution& sol) {
    if (!(sol.k > 0.0))
        throw DomainError("phase shift extraction requires k > 0");
    const std::size_t n = sol.u.size() - 1;
    if (sol.x[n] <= sol.effective_range_R + 4.0 * sol.h)
        throw DomainError("grid does not extend beyond the potential range");

    const double x_m =
        sol.effective_range_R + 0.25 * wavelength_scale(sol.k);
    std::size_t j = static_cast<std::size_t>(std::llround(x_m / sol.h));
    j = std::clamp(j, sol.i_R + 2, n - 2);

    // Quarter-wavelength shift if u sits on a node; the amplitude scale
    // hypot(u, u'/k) is node-free.
    const std::size_t quarter = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::llround(kPi / (2.0 * sol.k * sol.h))));
    for (int attempt = 0; attempt < 2; ++attempt) {
        double um = sol.u[j];
        double amp = std::hypot(um, deriv5_centered(sol.u, j, sol.h) / sol.k);
        if (std::abs(um) > 1e-12 * amp && amp > 0.0)
            return {sol.k, channel_index(sol.channel), matched_phase(sol, j), 0};
        if (j + quarter + 2 <= n)
            j += quarter;
        else if (j >= sol.i_R + 2 + quarter)
            j -= quarter;
    }
    throw MatchingError("wave function degenerate at both match points (k=" +
                        std::to_string(sol.k) + ")");
}

std::vector<PhaseShiftRecord> sweep_phase_shifts(const PotentialSpec& spec,
                                                 Channel channel,
                                                 const std::vector<double>& k_grid,
                                                 const SolverParams& params) {
    if (k_grid.empty()) return {};
    for (std::size_t i = 0; i < k_grid.size(); ++i) {
        if (!(k_grid[i] > 0.0))
            throw DomainError("sweep requires k > 0");
        if (i > 0 && !(k_grid[i] > k_grid[i - 1]))
            throw DomainError("sweep requires a strictly ascending k grid");
    }

    std::vector<PhaseShiftRecord> records(k_grid.size());
    for (std::size_t i = 0; i < k_grid.size(); ++i) {
        double k = k_grid[i];
        auto sol = integrate_radial(spec, channel, k, params.h,
                                    default_x_max(spec, k, params.x_max_margin));
        records[i] = extract_phase_shift(sol);
    }

    // Anchor the highest-k record on its principal value and carry the
    // branch downward in k so delta(k) is continuous.
    for (std::size_t i = records.size() - 1; i-- > 0;) {
        double target = records[i + 1].delta;
        int m = static_cast<int>(std::lround((target - records[i].delta) / kPi));
        records[i].branch_offset = m;
        records[i].delta += m * kPi;
        if (std::abs(records[i].delta - target) >= kPi / 2.0)
            throw ResolutionError(
                "phase shift jumps by >= pi/2 between k=" +
                std::to_string(records[i].k) + " and k=" +
                std::to_string(records[i + 1].k) + "; refine the k grid");
    }
    return records;
}

}  // namespace scatter1d
