#pragma once

#include <vector>

#include "scatter1d/potential.hpp"
#include "scatter1d/radial_solver.hpp"

namespace scatter1d {

enum class SpectrumMethod { node_count, levinson };

struct SpectrumReport {
    Channel channel;
    int n_bound;
    SpectrumMethod method;
    double levinson_residual;  // |delta(k_min)-delta(k_max)-n*pi|; NaN for node_count
};

// Oscillation count of the zero-energy regular solution: one bound
// state per node. Interior nodes are strict sign changes on (0, R];
// beyond R the solution is the line u(R) + u'(R)(x-R), which
// contributes exactly one more node iff u(R) and u'(R) have opposite
// signs (the line's root sits at x = R - u/u' > R, the zero-energy
// scattering length). Raises GridError when u(R) itself is on a node
// and ThresholdError when the exterior line is flat (state exactly at
// threshold).
SpectrumReport count_bound_states_nodes(const PotentialSpec& spec,
                                        Channel channel,
                                        const SolverParams& params);

// Bound-state count from an unwrapped phase-shift sweep:
// n = round((delta(k_min) - delta(k_max))/pi). Requires the sweep to
// bracket the spectrum: k_min*R <= 0.01, k_max*R >= 50 and
// |delta(k_max)| < 0.02 (the infinite-k anchor), else GridError asking
// for a longer sweep. A residual above 0.2 rad means the sweep does not
// realize an integer multiple of pi and raises InconsistencyError (for
// the even channel this is the expected outcome: its zero-energy limit
// sits at half-odd multiples of pi; measure the difference directly
// instead of forcing it through this check).
SpectrumReport levinson_check(const std::vector<PhaseShiftRecord>& records,
                              double effective_range_R);

}  // namespace scatter1d
