#pragma once

#include <cstddef>
#include <vector>

#include "scatter1d/potential.hpp"

namespace scatter1d {

// The two parity channels of the half-line problem. The even channel
// (L=0) carries the symmetric solution with u'(0)=0 and a cosine-like
// asymptote; the odd channel (L=1) carries the antisymmetric solution
// with u(0)=0 and a sine-like asymptote.
enum class Channel { even = 0, odd = 1 };

constexpr int channel_index(Channel c) { return static_cast<int>(c); }

// Grid controls shared by every solver-backed operation. x_max is
// placed at effective_range_R + x_max_margin * max(1, 2*pi/k); the
// requested step is rounded down so the potential range falls exactly
// on a grid point.
struct SolverParams {
    double h = 1e-3;
    double x_max_margin = 1.0;
};

// u(x0) sampled on the uniform grid x[i] = i*h for one channel at one
// wave number. Inside [0, R] the samples come from the three-term
// recurrence; beyond R the equation is free and the samples continue
// the interior solution exactly: u = u_R cos(k(x-R)) + (du_R/k) sin(k(x-R))
// for k > 0, linear for k = 0. i_R indexes x = R on the grid.
struct RadialSolution {
    Channel channel;
    double k;
    double h;                  // actual step after rounding, <= requested
    double effective_range_R;
    std::vector<double> x;
    std::vector<double> u;
    std::size_t i_R;
    double u_R;    // u at R
    double du_R;   // du/dx at R, one-sided five-point value
};

// Phase shift at one wave number. `delta` is the matched value reduced
// to (-pi/2, pi/2] plus branch_offset*pi applied during a sweep so the
// curve is continuous in k with delta(k->inf) -> 0.
struct PhaseShiftRecord {
    double k;
    int L;
    double delta;
    int branch_offset;
};

double default_x_max(const PotentialSpec& spec, double k, double margin);

// Integrate u'' = (U - k^2) u outward from the parity boundary
// condition.  Starts: odd -> u(0)=0, u(h)=h; even -> u(0)=1 with the
// second point fixed by the reflected (ghost) first step of the same
// recurrence, which keeps the even start at the integrator's own
// order.  Throws StabilityError when h*max(sqrt|U-k^2|) > 0.5 and
// DomainError when x_max <= effective_range_R.
RadialSolution integrate_radial(const PotentialSpec& spec, Channel channel,
                                double k, double h, double x_max);

// Match the solution to its free asymptote at x_m = R + 0.25*max(1, 2*pi/k):
// the log-derivative gamma = u'/u (five-point derivative) satisfies
// gamma = k cot(k x_m + delta) for the odd channel and
// gamma = -k tan(k x_m + delta) for the even channel. Solved in atan2
// form, immune to zeros of u or u'. If |u(x_m)| is degenerate relative
// to the local amplitude the match point shifts by a quarter
// wavelength; failure at both points raises MatchingError.
PhaseShiftRecord extract_phase_shift(const RadialSolution& sol);

// Solve and match across an ascending k grid, then unwrap: the highest-k
// record keeps its principal value (branch_offset 0) and continuity
// propagates downward in k. A post-unwrap jump >= pi/2 between
// neighbours raises ResolutionError.
std::vector<PhaseShiftRecord> sweep_phase_shifts(const PotentialSpec& spec,
                                                 Channel channel,
                                                 const std::vector<double>& k_grid,
                                                 const SolverParams& params);

}  // namespace scatter1d
