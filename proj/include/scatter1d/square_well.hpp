#pragma once

#include "scatter1d/effective_range.hpp"
#include "scatter1d/radial_solver.hpp"

namespace scatter1d {

// Closed forms for the attractive square well U = -beta0^2 on [0, R]:
// the exact reference every numerical path is validated against.
struct SquareWellParams {
    double beta0;
    double R;
};

// Interior wave number sqrt(k^2 + beta0^2); >= beta0 for all real k.
double beta_k(const SquareWellParams& p, double k);

// Log-derivative matching at R in rational form:
//   k cot(delta_1) = [k^2 tan(bR) tan(kR) + k b] / [k tan(bR) - b tan(kR)]
//   k tan(delta_0) = [k b tan(bR) - k^2 tan(kR)] / [k + b tan(bR) tan(kR)]
// with b = beta(k). When |tan(bR)| overflows the forms are rearranged by
// dividing through; a denominator within 1e-14 of zero (relative to its
// terms) marks a resonance crossing and raises PoleError.
double k_cot_delta1(const SquareWellParams& p, double k);
double k_tan_delta0(const SquareWellParams& p, double k);

// Exact phase shift reduced to (-pi/2, pi/2], evaluated in atan2 form
// (finite at the resonance crossings where the rational forms blow up).
double phase_shift(const SquareWellParams& p, Channel channel, double k);

// Scattering length and effective range:
//   odd:  a = R - tan(beta0 R)/beta0
//   even: a = R + 1/(beta0 tan(beta0 R))
// with the matching closed-form r per channel. Within 1e-12 of a
// threshold the limit values are returned: 1/a = 0 and r = R.
EffectiveRangeParams scattering_params(const SquareWellParams& p,
                                       Channel channel);

// Bound-state count per channel window:
//   odd:  n = floor(beta0 R/pi + 1/2)   (first state above beta0 R = pi/2)
//   even: n = ceil(beta0 R/pi)          (always at least one state)
// Exactly on a window boundary (within 1e-12) a new state is appearing
// and ThresholdError is raised.
int bound_state_count(const SquareWellParams& p, Channel channel);

// Distance from beta0*R to the nearest window boundary of the channel.
double threshold_distance(const SquareWellParams& p, Channel channel);

}  // namespace scatter1d
