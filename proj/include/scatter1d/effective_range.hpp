#pragma once

#include <optional>
#include <vector>

#include "scatter1d/potential.hpp"
#include "scatter1d/radial_solver.hpp"

namespace scatter1d {

enum class ERMethod { integral, low_k_fit, oracle };

struct FitDiagnostics {
    double k_min = 0.0;
    double k_max = 0.0;
    int n_points = 0;
    double residual_norm = 0.0;  // rms of fit residuals
    double condition = 0.0;      // condition estimate of the design matrix
};

// Scattering length and effective range for one channel. `a` is the
// scattering length (infinite at a bound-state threshold, where inv_a
// carries the information); near_threshold flags |1/a| < 1e-6, in which
// case consumers should report inv_a rather than a.
struct EffectiveRangeParams {
    Channel channel;
    double a = 0.0;
    double inv_a = 0.0;
    double r = 0.0;
    ERMethod method = ERMethod::integral;
    bool near_threshold = false;
    std::optional<FitDiagnostics> fit;
};

// Zero-energy regular solution u0 normalized to the free asymptote
// v0(x0) = 1 - x0/a, which it equals identically beyond the potential
// range. The normalization matches du0/dx = -1/a at R.
struct ZeroEnergyPair {
    RadialSolution u0;
    double a;
};

inline double v0_at(const ZeroEnergyPair& pair, double x0) {
    return 1.0 - x0 / pair.a;
}

// k cot(delta) for the odd channel, k tan(delta) for the even channel,
// from the numerically extracted phase shift. Throws PoleError when the
// extracted delta sits within 1e-12 of a pole of cot/tan.
double k_function(const PotentialSpec& spec, Channel channel, double k,
                  const SolverParams& params);

// Least-squares fit of k_function over the grid to c0 + c1 k^2 + c2 k^4
// (the k^4 column absorbs curvature so c1 stays unbiased; only c0 and
// c1 are reported). Odd channel: a = -1/c0, r = 2 c1. Even channel:
// a = +1/c0, r = -2 c1; both channels then share r -> R at a threshold
// and r = 2*Int[v0^2-u0^2] (see integral_effective_range).
// A grid where every |delta| <= 1e-13 is the free case: a = 0, r = 0.
EffectiveRangeParams fit_effective_range(const PotentialSpec& spec,
                                         Channel channel,
                                         const std::vector<double>& k_grid,
                                         const SolverParams& params);

// Default low-energy fit window: k*R in [0.02, 0.3], 12 points uniform
// in k^2. Narrow the window (k*R <= 0.15) when r must be resolved to
// better than ~1e-4 relative; the k^6 truncation bias scales as k_max^4.
std::vector<double> default_fit_grid(double R, double k_max_R = 0.3);

// Zero-energy solve normalized against v0 = 1 - x0/a; `a` must be a
// finite nonzero scattering length obtained beforehand (fit or closed
// form). Throws NormalizationError when a is infinite, zero, or the
// normalized solution misses its asymptote at R.
ZeroEnergyPair zero_energy_solution(const PotentialSpec& spec, Channel channel,
                                    const SolverParams& params, double a);

// r = 2 * Integral[0..R] (v0^2 - u0^2) dx0 for both channels; the
// integrand vanishes identically beyond R, so truncation at R is exact.
// Composite Simpson on the solver grid.
EffectiveRangeParams integral_effective_range(const ZeroEnergyPair& pair,
                                              Channel channel);

// Residual of the two-energy relation connecting k_function values at
// k1 and k2 through the overlap integral of the normalized solutions
// with their free asymptotes:
//   odd:  K(k2) - K(k1) - (k2^2-k1^2) * Int[0..R](v1 v2 - u1 u2) dx0
//   even: K(k2) - K(k1) + (k2^2-k1^2) * Int[0..R](v1 v2 - u1 u2) dx0
// Vanishes up to solver and quadrature error.
double two_energy_residual(const PotentialSpec& spec, Channel channel,
                           double k1, double k2, const SolverParams& params);

}  // namespace scatter1d
