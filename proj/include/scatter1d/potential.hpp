#pragma once

#include <array>
#include <functional>
#include <variant>
#include <vector>

namespace scatter1d {

// Reduced units throughout: hbar^2/2m = 1, energy E = k^2, and the
// potential enters as U(x0) = 2mV(x0)/hbar^2 with dimension 1/length^2.
// All potentials are centrally symmetric and strictly finite range:
// U(x0) = 0 for every x0 > effective_range_R.

// Attractive square well: U = -beta0^2 on [0, R], 0 beyond R.
// The value exactly at x0 = R is the interior one (fixed for determinism).
struct SquareWell {
    double beta0;  // sqrt of well depth, > 0
    double R;      // well range, > 0
};

// Piecewise-linear profile through (x, U) nodes with ascending x >= 0;
// clamped to the first node's value below it, exactly 0 past the last.
struct Tabulated {
    std::vector<std::array<double, 2>> nodes;
};

// Arbitrary profile truncated to zero beyond an explicit cutoff.
struct AnalyticWindowed {
    std::function<double(double)> u;
    double cutoff;
};

struct PotentialSpec {
    std::variant<SquareWell, Tabulated, AnalyticWindowed> kind;
    double effective_range_R;  // smallest x0 beyond which U is exactly 0
};

// Evaluate U(x0) on the half-line. Throws DomainError for x0 < 0.
double evaluate(const PotentialSpec& spec, double x0);

// Constructors validate their arguments and set effective_range_R.
PotentialSpec make_square_well(double beta0, double R);
PotentialSpec make_tabulated(std::vector<std::array<double, 2>> nodes);
PotentialSpec make_analytic_windowed(std::function<double(double)> u,
                                     double cutoff);

}  // namespace scatter1d
