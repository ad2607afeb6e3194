#include "scatter1d/effective_range.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "scatter1d/errors.hpp"
#include "scatter1d/numerics.hpp"

namespace scatter1d {
namespace {

constexpr double kPiHalf = std::numbers::pi / 2.0;

// Raw matched phase for one k.
double raw_delta(const PotentialSpec& spec, Channel channel, double k,
                 const SolverParams& params) {
    auto sol = integrate_radial(spec, channel, k, params.h,
                                default_x_max(spec, k, params.x_max_margin));
    return extract_phase_shift(sol).delta;
}

// k cot(delta) / k tan(delta) with pole guards on the reduced phase.
double k_function_of_delta(Channel channel, double k, double delta) {
    if (channel == Channel::odd) {
        if (std::abs(delta) < 1e-12)
            throw PoleError("k cot(delta) pole: delta = 0 (mod pi) at k=" +
                            std::to_string(k) + "; use an adjacent k");
        return k / std::tan(delta);
    }
    if (kPiHalf - std::abs(delta) < 1e-12)
        throw PoleError("k tan(delta) pole: delta = pi/2 (mod pi) at k=" +
                        std::to_string(k) + "; use an adjacent k");
    return k * std::tan(delta);
}

EffectiveRangeParams params_from_inv_a(Channel channel, double inv_a, double r,
                                       ERMethod method) {
    EffectiveRangeParams out;
    out.channel = channel;
    out.inv_a = inv_a;
    out.a = inv_a == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / inv_a;
    out.r = r;
    out.method = method;
    out.near_threshold = std::abs(inv_a) < 1e-6;
    return out;
}

}  // namespace

double k_function(const PotentialSpec& spec, Channel channel, double k,
                  const SolverParams& params) {
    if (!(k > 0.0)) throw DomainError("k_function requires k > 0");
    return k_function_of_delta(channel, k, raw_delta(spec, channel, k, params));
}

std::vector<double> default_fit_grid(double R, double k_max_R) {
    const int n = 12;
    const double lo = 0.02 / R, hi = k_max_R / R;
    std::vector<double> grid(n);
    for (int j = 0; j < n; ++j) {
        double q = lo * lo + (hi * hi - lo * lo) * j / (n - 1);
        grid[j] = std::sqrt(q);
    }
    return grid;
}

EffectiveRangeParams fit_effective_range(const PotentialSpec& spec,
                                         Channel channel,
                                         const std::vector<double>& k_grid,
                                         const SolverParams& params) {
    const double R = spec.effective_range_R;
    if (k_grid.size() < 5)
        throw DomainError("effective-range fit needs at least 5 k points");
    for (std::size_t i = 0; i < k_grid.size(); ++i) {
        if (!(k_grid[i] > 0.0)) throw DomainError("fit grid requires k > 0");
        if (i > 0 && !(k_grid[i] > k_grid[i - 1]))
            throw DomainError("fit grid must be strictly ascending");
    }
    if (k_grid.back() * R > 0.35)
        throw DomainError("fit grid leaves the low-energy window (k*R > 0.35)");

    std::vector<double> deltas(k_grid.size());
    double max_abs = 0.0;
    for (std::size_t i = 0; i < k_grid.size(); ++i) {
        deltas[i] = raw_delta(spec, channel, k_grid[i], params);
        max_abs = std::max(max_abs, std::abs(deltas[i]));
    }

    FitDiagnostics diag;
    diag.k_min = k_grid.front();
    diag.k_max = k_grid.back();
    diag.n_points = static_cast<int>(k_grid.size());

    if (max_abs <= 3e-11) {
        // Free case: no scattering anywhere on the grid.  The gate sits
        // above the extractor's noise floor (~4e-12 on a default grid)
        // and three decades below any resolvable physical phase.  Odd
        // channel: a = 0 as the 1/c0 -> 0 limit.  Even channel: the
        // intercept 1/a vanishes instead, and a flat zero-energy line
        // is exactly the threshold signature, so the flag stays on.
        if (channel == Channel::even) {
            auto out = params_from_inv_a(channel, 0.0, 0.0, ERMethod::low_k_fit);
            out.fit = diag;
            return out;
        }
        EffectiveRangeParams out;
        out.channel = channel;
        out.a = 0.0;
        out.inv_a = std::numeric_limits<double>::infinity();
        out.r = 0.0;
        out.method = ERMethod::low_k_fit;
        out.near_threshold = false;
        out.fit = diag;
        return out;
    }

    // Columns scaled by k_max powers so the design matrix stays
    // well-conditioned; coefficients are unscaled afterwards.
    const std::size_t n = k_grid.size();
    const double ks = k_grid.back();
    Eigen::MatrixXd A(n, 3);
    Eigen::VectorXd y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double q = (k_grid[i] / ks) * (k_grid[i] / ks);
        A(i, 0) = 1.0;
        A(i, 1) = q;
        A(i, 2) = q * q;
        y(i) = k_function_of_delta(channel, k_grid[i], deltas[i]);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU |
                                                 Eigen::ComputeThinV);
    Eigen::Vector3d c = svd.solve(y);
    diag.residual_norm = std::sqrt((A * c - y).squaredNorm() / n);
    diag.condition = svd.singularValues()(0) /
                     svd.singularValues()(svd.singularValues().size() - 1);

    const double c0 = c(0);
    const double c1 = c(1) / (ks * ks);
    // Expansion slopes differ between channels:
    //   odd:  k cot(delta) = -1/a + (r/2) k^2 + O(k^4)
    //   even: k tan(delta) = +1/a - (r/2) k^2 + O(k^4)
    // so r -> R at a threshold for both (the even-channel k^2 slope
    // carries the opposite sign of its closed form and integral).
    const double inv_a = channel == Channel::odd ? -c0 : c0;
    const double r = channel == Channel::odd ? 2.0 * c1 : -2.0 * c1;
    auto out = params_from_inv_a(channel, inv_a, r, ERMethod::low_k_fit);
    out.fit = diag;
    return out;
}

ZeroEnergyPair zero_energy_solution(const PotentialSpec& spec, Channel channel,
                                    const SolverParams& params, double a) {
    if (!std::isfinite(a))
        throw NormalizationError(
            "zero-energy normalization impossible: scattering length infinite "
            "(bound state at threshold)");
    if (a == 0.0)
        throw NormalizationError(
            "zero-energy normalization degenerate: scattering length zero");

    const double R = spec.effective_range_R;
    auto sol = integrate_radial(spec, channel, 0.0, params.h,
                                default_x_max(spec, 0.0, params.x_max_margin));
    if (sol.du_R == 0.0 || !std::isfinite(1.0 / (a * sol.du_R)))
        throw NormalizationError(
            "zero-energy solution has no slope at the range boundary");

    // Slope matching: v0' = -1/a everywhere, so scale u to the same
    // slope at R. The value mismatch left over is the integrator error.
    const double s = -1.0 / (a * sol.du_R);
    for (double& v : sol.u) v *= s;
    sol.u_R *= s;
    sol.du_R *= s;

    const double v_R = 1.0 - R / a;
    if (std::abs(sol.u_R - v_R) > 1e-6 * std::max(1.0, std::abs(v_R)))
        throw NormalizationError(
            "normalized zero-energy solution misses its asymptote at R "
            "(|u(R)-v0(R)|=" +
            std::to_string(std::abs(sol.u_R - v_R)) + ")");
    return {std::move(sol), a};
}

EffectiveRangeParams integral_effective_range(const ZeroEnergyPair& pair,
                                              Channel channel) {
    const auto& sol = pair.u0;
    const double v_R = v0_at(pair, sol.effective_range_R);
    if (std::abs(sol.u_R - v_R) > 1e-6 * std::max(1.0, std::abs(v_R)))
        throw InconsistencyError(
            "zero-energy pair violates its normalization invariant");

    std::vector<double> w(sol.i_R + 1);
    for (std::size_t i = 0; i <= sol.i_R; ++i) {
        double v = v0_at(pair, sol.x[i]);
        w[i] = v * v - sol.u[i] * sol.u[i];
    }
    // The integrand vanishes identically beyond R, so stopping the
    // quadrature at R is exact, not a truncation.
    const double r = 2.0 * integrate_uniform(w, sol.i_R, sol.h);
    return params_from_inv_a(channel, 1.0 / pair.a, r, ERMethod::integral);
}

namespace {

struct NormalizedSolution {
    RadialSolution sol;
    double delta;  // reduced phase
    double K;      // k cot(delta) or k tan(delta)
};

// Scale a solver solution to the asymptote chi(kx+delta)/chi(delta),
// chi = sin for the odd channel and cos for the even channel.
NormalizedSolution normalize_to_asymptote(const PotentialSpec& spec,
                                          Channel channel, double k,
                                          const SolverParams& params) {
    auto sol = integrate_radial(spec, channel, k, params.h,
                                default_x_max(spec, k, params.x_max_margin));
    const double delta = extract_phase_shift(sol).delta;
    const double K = k_function_of_delta(channel, k, delta);

    const double R = sol.effective_range_R;
    const double amp = std::hypot(sol.u_R, sol.du_R / k);
    // Full asymptotic phase theta = k R + phi with u = A chi(kx + phi).
    const double theta = channel == Channel::odd
                             ? std::atan2(k * sol.u_R, sol.du_R)
                             : std::atan2(-sol.du_R, k * sol.u_R);
    const double phi = theta - k * R;
    const int m = static_cast<int>(std::lround((phi - delta) / std::numbers::pi));
    const double chi_delta =
        channel == Channel::odd ? std::sin(delta) : std::cos(delta);
    if (amp == 0.0 || std::abs(chi_delta) < 1e-12)
        throw PoleError("asymptote normalization degenerate at k=" +
                        std::to_string(k));
    const double s = 1.0 / (amp * (m % 2 == 0 ? 1.0 : -1.0) * chi_delta);
    for (double& v : sol.u) v *= s;
    sol.u_R *= s;
    sol.du_R *= s;
    return {std::move(sol), delta, K};
}

}  // namespace

double two_energy_residual(const PotentialSpec& spec, Channel channel,
                           double k1, double k2, const SolverParams& params) {
    if (!(k1 > 0.0) || !(k2 > 0.0) || k1 == k2)
        throw DomainError("two-energy relation requires distinct positive k");

    auto s1 = normalize_to_asymptote(spec, channel, k1, params);
    auto s2 = normalize_to_asymptote(spec, channel, k2, params);
    const auto& u1 = s1.sol.u;
    const auto& u2 = s2.sol.u;
    const std::size_t i_R = s1.sol.i_R;
    if (i_R != s2.sol.i_R || s1.sol.h != s2.sol.h)
        throw InconsistencyError("two-energy solves landed on different grids");

    auto v_of = [channel](double k, double delta, double x) {
        return channel == Channel::odd
                   ? std::sin(k * x + delta) / std::sin(delta)
                   : std::cos(k * x + delta) / std::cos(delta);
    };
    std::vector<double> w(i_R + 1);
    for (std::size_t i = 0; i <= i_R; ++i) {
        double x = s1.sol.x[i];
        w[i] = v_of(k1, s1.delta, x) * v_of(k2, s2.delta, x) - u1[i] * u2[i];
    }
    const double integral = integrate_uniform(w, i_R, s1.sol.h);
    const double sign = channel == Channel::odd ? 1.0 : -1.0;
    return s2.K - s1.K - sign * (k2 * k2 - k1 * k1) * integral;
}

}  // namespace scatter1d
