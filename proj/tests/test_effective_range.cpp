#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "doctest.h"

#include "scatter1d/effective_range.hpp"
#include "scatter1d/errors.hpp"
#include "scatter1d/potential.hpp"
#include "scatter1d/square_well.hpp"

using namespace scatter1d;

namespace {
constexpr double kPi = std::numbers::pi;

const SolverParams kFast{1e-3, 1.0};
const SolverParams kFine{1e-4, 1.0};

PotentialSpec free_field() {
    return make_tabulated({{0.0, 0.0}, {0.5, 0.0}});
}
}  // namespace

TEST_CASE("k_function reproduces the closed forms") {
    const auto spec = make_square_well(2.0, 1.0);
    CHECK(k_function(spec, Channel::odd, 0.2, kFine) ==
          doctest::Approx(-0.46176944590281846).epsilon(1e-8));
    CHECK(k_function(spec, Channel::even, 0.2, kFine) ==
          doctest::Approx(1.2944865489699812).epsilon(1e-8));
}

TEST_CASE("k_function raises PoleError where cot or tan blow up") {
    // Free field: delta = 0, a pole of cot.  At k = 0.04 the extracted
    // phase carries ~6e-13 of integration noise, inside the 1e-12
    // guard; at larger k the noise itself exceeds the guard.
    CHECK_THROWS_AS(k_function(free_field(), Channel::odd, 0.04, kFast), PoleError);
    CHECK_THROWS_AS(k_function(free_field(), Channel::odd, 0.0, kFast), DomainError);
}

TEST_CASE("default fit grid spans the low-energy window uniformly in k^2") {
    const auto grid = default_fit_grid(2.0, 0.3);
    REQUIRE(grid.size() == 12);
    CHECK(grid.front() == doctest::Approx(0.01));
    CHECK(grid.back() == doctest::Approx(0.15));
    const double dq = grid[1] * grid[1] - grid[0] * grid[0];
    for (std::size_t i = 1; i < grid.size(); ++i) {
        CHECK(grid[i] > grid[i - 1]);
        CHECK(grid[i] * grid[i] - grid[i - 1] * grid[i - 1] ==
              doctest::Approx(dq).epsilon(1e-12));
    }
}

TEST_CASE("low-k fit recovers the closed-form parameters in both channels") {
    struct Case {
        double beta0;
        double a1, r1, a0, r0;
    };
    for (const auto& c : {Case{1.0, -0.55740772465490223, 1.7211842930323504,
                               1.6420926159343307, 0.26740245663570243},
                          Case{2.0, 2.0925199316307595, 0.80439968074344374,
                               0.77117122281985712, 0.1153158448906685}}) {
        const auto spec = make_square_well(c.beta0, 1.0);
        const auto grid = default_fit_grid(1.0, 0.15);
        const auto odd = fit_effective_range(spec, Channel::odd, grid, kFine);
        CHECK(odd.a == doctest::Approx(c.a1).epsilon(1e-5));
        CHECK(odd.r == doctest::Approx(c.r1).epsilon(1e-4));
        CHECK(odd.method == ERMethod::low_k_fit);
        CHECK_FALSE(odd.near_threshold);
        REQUIRE(odd.fit.has_value());
        CHECK(odd.fit->n_points == 12);
        CHECK(odd.fit->k_min == doctest::Approx(0.02));
        CHECK(odd.fit->k_max == doctest::Approx(0.15));
        CHECK(odd.fit->residual_norm < 1e-7);
        CHECK(odd.fit->condition > 1.0);

        const auto even = fit_effective_range(spec, Channel::even, grid, kFine);
        CHECK(even.a == doctest::Approx(c.a0).epsilon(1e-5));
        CHECK(even.r == doctest::Approx(c.r0).epsilon(1e-4));
    }
}

TEST_CASE("fit validates its grid") {
    const auto spec = make_square_well(1.0, 1.0);
    CHECK_THROWS_AS(
        fit_effective_range(spec, Channel::odd, {0.02, 0.03, 0.04, 0.05}, kFast),
        DomainError);
    CHECK_THROWS_AS(fit_effective_range(spec, Channel::odd,
                                        {0.02, 0.02, 0.04, 0.05, 0.06}, kFast),
                    DomainError);
    CHECK_THROWS_AS(fit_effective_range(spec, Channel::odd,
                                        {0.02, 0.05, 0.10, 0.20, 0.40}, kFast),
                    DomainError);
}

TEST_CASE("fit on the free field reports the zero scattering length limit") {
    const auto p =
        fit_effective_range(free_field(), Channel::odd, default_fit_grid(0.5), kFast);
    CHECK(p.a == 0.0);
    CHECK(p.r == 0.0);
    CHECK(std::isinf(p.inv_a));
    CHECK_FALSE(p.near_threshold);
}

TEST_CASE("fit flags a well sitting near a bound-state threshold") {
    // Just below the first even threshold beta0*R = pi the scattering
    // length is ~ -3e6, i.e. |1/a| ~ 3e-7 < 1e-6.
    const auto spec = make_square_well(kPi - 1e-7, 1.0);
    const auto p =
        fit_effective_range(spec, Channel::even, default_fit_grid(1.0, 0.15), kFine);
    CHECK(p.near_threshold);
    CHECK(std::abs(p.inv_a) < 1e-6);
}

TEST_CASE("zero-energy solution locks onto the 1 - x/a asymptote") {
    const auto spec = make_square_well(2.0, 1.0);
    for (Channel ch : {Channel::even, Channel::odd}) {
        const SquareWellParams w{2.0, 1.0};
        const double a = scattering_params(w, ch).a;
        const auto pair = zero_energy_solution(spec, ch, kFine, a);
        CHECK(pair.a == a);
        // The tail is the asymptote by construction; check at R and a
        // strictly interior tail point.
        const auto& sol = pair.u0;
        CHECK(std::abs(sol.u_R - v0_at(pair, 1.0)) < 1e-6);
        const std::size_t j = sol.i_R + (sol.u.size() - 1 - sol.i_R) / 2;
        CHECK(sol.u[j] == doctest::Approx(v0_at(pair, sol.x[j])).epsilon(1e-6));
        CHECK(sol.du_R == doctest::Approx(-1.0 / a).epsilon(1e-9));
    }
}

TEST_CASE("zero-energy normalization rejects degenerate scattering lengths") {
    const auto spec = make_square_well(2.0, 1.0);
    CHECK_THROWS_AS(zero_energy_solution(spec, Channel::odd, kFast,
                                         std::numeric_limits<double>::infinity()),
                    NormalizationError);
    CHECK_THROWS_AS(zero_energy_solution(spec, Channel::odd, kFast, 0.0),
                    NormalizationError);
}

TEST_CASE("integral effective range matches the closed form in both channels") {
    struct Case {
        double beta0;
        double a1, r1, a0, r0;
    };
    for (const auto& c : {Case{1.0, -0.55740772465490223, 1.7211842930323504,
                               1.6420926159343307, 0.26740245663570243},
                          Case{2.0, 2.0925199316307595, 0.80439968074344374,
                               0.77117122281985712, 0.1153158448906685}}) {
        const auto spec = make_square_well(c.beta0, 1.0);
        const auto odd_pair =
            zero_energy_solution(spec, Channel::odd, kFine, c.a1);
        const auto odd = integral_effective_range(odd_pair, Channel::odd);
        CHECK(odd.r == doctest::Approx(c.r1).epsilon(1e-6));
        CHECK(odd.method == ERMethod::integral);
        const auto even_pair =
            zero_energy_solution(spec, Channel::even, kFine, c.a0);
        const auto even = integral_effective_range(even_pair, Channel::even);
        CHECK(even.r == doctest::Approx(c.r0).epsilon(1e-6));
    }
}

TEST_CASE("k-function values at two energies obey the overlap relation") {
    // Independent reference values for beta0=1, R=1:
    //   K1(0.1)=1.8026319177229031, K1(0.3)=1.8720488366639871
    //   K0(0.1)=0.60764398489281256, K0(0.3)=0.5971039686628327
    const auto spec = make_square_well(1.0, 1.0);
    CHECK(k_function(spec, Channel::odd, 0.1, kFast) ==
          doctest::Approx(1.8026319177229031).epsilon(1e-7));
    CHECK(k_function(spec, Channel::odd, 0.3, kFast) ==
          doctest::Approx(1.8720488366639871).epsilon(1e-7));
    CHECK(k_function(spec, Channel::even, 0.1, kFast) ==
          doctest::Approx(0.60764398489281256).epsilon(1e-7));
    CHECK(k_function(spec, Channel::even, 0.3, kFast) ==
          doctest::Approx(0.5971039686628327).epsilon(1e-7));
    CHECK(std::abs(two_energy_residual(spec, Channel::odd, 0.1, 0.3, kFast)) < 1e-7);
    CHECK(std::abs(two_energy_residual(spec, Channel::even, 0.1, 0.3, kFast)) < 1e-7);
}

TEST_CASE("the overlap relation holds off the reference well too") {
    const auto spec = make_square_well(2.0, 1.0);
    CHECK(std::abs(two_energy_residual(spec, Channel::odd, 0.15, 0.45, kFast)) < 1e-6);
    CHECK(std::abs(two_energy_residual(spec, Channel::even, 0.15, 0.45, kFast)) < 1e-6);
    CHECK_THROWS_AS(two_energy_residual(spec, Channel::odd, 0.2, 0.2, kFast),
                    DomainError);
    CHECK_THROWS_AS(two_energy_residual(spec, Channel::odd, -0.1, 0.2, kFast),
                    DomainError);
}
