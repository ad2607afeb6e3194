// Acceptance gate: ten independent checks, one PASS/FAIL line each.
// Every tolerance is stated inline; the reference values come from the
// closed-form square-well results or from exact algebraic identities.
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "scatter1d/effective_range.hpp"
#include "scatter1d/errors.hpp"
#include "scatter1d/observables.hpp"
#include "scatter1d/potential.hpp"
#include "scatter1d/radial_solver.hpp"
#include "scatter1d/spectrum.hpp"
#include "scatter1d/square_well.hpp"

using namespace scatter1d;

namespace {

constexpr double kPi = std::numbers::pi;
int g_failures = 0;

void report(int id, const char* label, bool ok, const std::string& detail) {
    std::printf("%s: criterion %2d  %s  [%s]\n", ok ? "PASS" : "FAIL", id, label,
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

// 1: numerically extracted phase shifts against the closed form.
void criterion_1() {
    const auto spec = make_square_well(2.0, 1.0);
    const SquareWellParams w{2.0, 1.0};
    const SolverParams params{1e-4, 1.0};
    std::vector<double> grid(50);
    for (int i = 0; i < 50; ++i) grid[i] = 0.05 + (5.0 - 0.05) * i / 49.0;
    double max_dev = 0.0;
    for (Channel ch : {Channel::even, Channel::odd}) {
        const auto recs = sweep_phase_shifts(spec, ch, grid, params);
        for (const auto& rec : recs) {
            const double exact = phase_shift(w, ch, rec.k);
            max_dev = std::max(max_dev,
                               std::abs(std::remainder(rec.delta - exact, kPi)));
        }
    }
    report(1, "phase shifts match the closed form to 1e-6 rad", max_dev < 1e-6,
           "max |ddelta| = " + fmt(max_dev) + " over 50 k in [0.05,5], both channels");
}

// 2: scattering length and effective range by fit and by integral.
void criterion_2() {
    const SolverParams params{1e-4, 1.0};
    double max_fit = 0.0, max_int = 0.0;
    for (double beta0 : {0.8, 1.0, 2.0, 2.5}) {
        const auto spec = make_square_well(beta0, 1.0);
        const SquareWellParams w{beta0, 1.0};
        for (Channel ch : {Channel::even, Channel::odd}) {
            const auto oracle = scattering_params(w, ch);
            const auto fit = fit_effective_range(
                spec, ch, default_fit_grid(1.0, 0.15), params);
            max_fit = std::max(max_fit,
                               std::abs(fit.a - oracle.a) / std::abs(oracle.a));
            max_fit = std::max(max_fit,
                               std::abs(fit.r - oracle.r) / std::abs(oracle.r));
            const auto pair = zero_energy_solution(spec, ch, params, oracle.a);
            const auto integ = integral_effective_range(pair, ch);
            max_int = std::max(max_int,
                               std::abs(integ.r - oracle.r) / std::abs(oracle.r));
        }
    }
    report(2, "a and r: fit within 1e-4, integral within 1e-6 relative",
           max_fit < 1e-4 && max_int < 1e-6,
           "fit dev = " + fmt(max_fit) + ", integral dev = " + fmt(max_int) +
               " over beta0*R in {0.8,1,2,2.5}");
}

// 3: optical theorem over randomized draws.
void criterion_3() {
    std::mt19937_64 rng(101u);
    std::uniform_real_distribution<double> phase(-kPi, kPi);
    std::uniform_real_distribution<double> wavenum(1e-3, 25.0);
    double max_res = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const auto a =
            amplitudes_from_phase_shifts(wavenum(rng), phase(rng), phase(rng));
        max_res = std::max(max_res, std::abs(optical_theorem_residual(a)));
    }
    report(3, "optical theorem residual below 1e-12", max_res < 1e-12,
           "max residual = " + fmt(max_res) + " over 1e4 draws");
}

// 4: unitarity and the two total-cross-section routes.
void criterion_4() {
    std::mt19937_64 rng(202u);
    std::uniform_real_distribution<double> phase(-kPi, kPi);
    std::uniform_real_distribution<double> wavenum(1e-3, 25.0);
    double max_uni = 0.0, max_sig = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double d0 = phase(rng), d1 = phase(rng);
        const auto a = amplitudes_from_phase_shifts(wavenum(rng), d0, d1);
        max_uni = std::max(max_uni, std::abs(std::norm(a.T_coef) +
                                             std::norm(a.R_coef) - 1.0));
        max_sig = std::max(max_sig, std::abs(a.sigma_tot -
                                             cross_section_from_phases(d0, d1)));
    }
    report(4, "unitarity and sigma_tot route agreement below 1e-12",
           max_uni < 1e-12 && max_sig < 1e-12,
           "unitarity dev = " + fmt(max_uni) + ", sigma dev = " + fmt(max_sig));
}

// 5: the two asymptotic waveform routes.
void criterion_5() {
    std::mt19937_64 rng(303u);
    std::uniform_real_distribution<double> phase(-kPi, kPi);
    std::uniform_real_distribution<double> wavenum(0.1, 3.0);
    std::uniform_real_distribution<double> dist(5.0, 50.0);
    double max_dev = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const auto a =
            amplitudes_from_phase_shifts(wavenum(rng), phase(rng), phase(rng));
        const double x = dist(rng) * (i % 2 == 0 ? 1.0 : -1.0);
        max_dev = std::max(max_dev, std::abs(asymptotic_waveform(a, x) -
                                             asymptotic_waveform_partial_wave(a, x)));
    }
    report(5, "waveform routes agree below 1e-13", max_dev < 1e-13,
           "max |dpsi| = " + fmt(max_dev) + " over 1e4 draws, |x| in [5,50]");
}

// 6: two-energy overlap relation on the solver grid.
void criterion_6() {
    const auto spec = make_square_well(1.0, 1.0);
    const SolverParams params{1e-3, 1.0};
    const double r_odd =
        std::abs(two_energy_residual(spec, Channel::odd, 0.1, 0.3, params));
    const double r_even =
        std::abs(two_energy_residual(spec, Channel::even, 0.1, 0.3, params));
    report(6, "two-energy relation residual below 1e-6",
           r_odd < 1e-6 && r_even < 1e-6,
           "odd = " + fmt(r_odd) + ", even = " + fmt(r_even) +
               " at k1=0.1, k2=0.3");
}

// 7: node-count bound states against the window formulas.
void criterion_7() {
    const SolverParams params{1e-3, 1.0};
    int checked = 0, matched = 0;
    double x = 0.1;
    const double step = (4.6 - 0.1) / 48.0;
    while (checked < 40 && x < 4.6) {
        x += step;
        // Skip boundary neighborhoods where the count is ill-defined.
        if (std::abs(x - kPi / 2.0) < 0.05 || std::abs(x - kPi) < 0.05) continue;
        const auto spec = make_square_well(x, 1.0);
        const SquareWellParams w{x, 1.0};
        bool ok = true;
        for (Channel ch : {Channel::even, Channel::odd})
            ok = ok && count_bound_states_nodes(spec, ch, params).n_bound ==
                           bound_state_count(w, ch);
        ++checked;
        if (ok) ++matched;
    }
    report(7, "bound-state counts exact at 40 well strengths",
           checked == 40 && matched == 40,
           std::to_string(matched) + "/" + std::to_string(checked) +
               " strengths in (0.1,4.6), both channels");
}

// 8: odd-channel phase difference across a bracketing sweep equals n*pi.
void criterion_8() {
    const SolverParams params{1e-3, 1.0};
    double worst = 0.0;
    bool ok = true;
    for (double beta0 : {1.0, 2.0}) {
        const double R = 2.0;  // puts k_min*R at 0.01 while beta0*R hits 2 and 4
        const auto spec = make_square_well(beta0, R);
        const SquareWellParams w{beta0, R};
        const int n = bound_state_count(w, Channel::odd);
        std::vector<double> grid(500);
        for (int i = 0; i < 500; ++i)
            grid[i] = 0.005 * std::exp(std::log(100.0 / 0.005) * i / 499.0);
        const auto recs = sweep_phase_shifts(spec, Channel::odd, grid, params);
        const double diff = recs.front().delta - recs.back().delta;
        const double residual = std::abs(diff - n * kPi);
        worst = std::max(worst, residual);
        ok = ok && residual < 0.05;
    }
    report(8, "odd-channel sweep difference is n*pi within 0.05 rad", ok,
           "worst residual = " + fmt(worst) +
               " for beta0*R in {2,4}, k in [0.005,100]");
}

// 9: oracle threshold behavior of 1/a and r.
void criterion_9() {
    bool ok = true;
    for (Channel ch : {Channel::odd, Channel::even}) {
        // L=1 approaches pi/2 from above; L=0 approaches pi from below.
        double prev_inv = 1e300, prev_rdev = 1e300;
        for (double eps : {1e-1, 1e-2, 1e-3}) {
            const double x =
                ch == Channel::odd ? kPi / 2.0 + eps : kPi - eps;
            const auto p = scattering_params(SquareWellParams{x, 1.0}, ch);
            ok = ok && std::abs(p.inv_a) < prev_inv &&
                 std::abs(p.r - 1.0) < prev_rdev;
            prev_inv = std::abs(p.inv_a);
            prev_rdev = std::abs(p.r - 1.0);
        }
    }
    report(9, "1/a -> 0 and r -> R monotonically at thresholds", ok,
           "eps in {1e-1,1e-2,1e-3} on both channel boundaries");
}

// 10: fourth-order convergence of the extracted phase shift.
void criterion_10() {
    const auto spec = make_square_well(2.0, 1.0);
    const double k = 1.0;
    const double exact_odd = -1.5180677560356134;
    const double exact_even = 0.90825295693356377;
    bool ok = true;
    std::string orders;
    for (Channel ch : {Channel::even, Channel::odd}) {
        const double exact = ch == Channel::even ? exact_even : exact_odd;
        std::vector<double> lh, le;
        for (double h : {0.04, 0.02, 0.01, 0.005, 0.0025}) {
            const auto sol = integrate_radial(spec, ch, k, h,
                                              default_x_max(spec, k, 1.0));
            const double d = extract_phase_shift(sol).delta;
            const double err = std::abs(std::remainder(d - exact, kPi));
            lh.push_back(std::log(h));
            le.push_back(std::log(err));
        }
        // Least-squares slope of log(err) vs log(h).
        const std::size_t n = lh.size();
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < n; ++i) {
            sx += lh[i];
            sy += le[i];
            sxx += lh[i] * lh[i];
            sxy += lh[i] * le[i];
        }
        const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        ok = ok && slope > 3.5 && slope < 4.5;
        orders += (orders.empty() ? "" : ", ") + fmt(slope);
    }
    report(10, "phase-shift error scales as h^4 (order in [3.5,4.5])", ok,
           "observed orders: " + orders);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (g_failures == 0) {
        std::printf("acceptance: all 10 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return 1;
}
