#include <cmath>

#include "doctest.h"

#include "scatter1d/errors.hpp"
#include "scatter1d/potential.hpp"

using namespace scatter1d;

TEST_CASE("square well evaluates to -beta0^2 inside and 0 outside") {
    const auto spec = make_square_well(2.0, 1.5);
    CHECK(spec.effective_range_R == 1.5);
    CHECK(evaluate(spec, 0.0) == -4.0);
    CHECK(evaluate(spec, 0.7) == -4.0);
    // The boundary point itself takes the interior value.
    CHECK(evaluate(spec, 1.5) == -4.0);
    CHECK(evaluate(spec, 1.5 + 1e-12) == 0.0);
    CHECK(evaluate(spec, 40.0) == 0.0);
}

TEST_CASE("square well constructor rejects bad parameters") {
    CHECK_THROWS_AS(make_square_well(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(make_square_well(-2.0, 1.0), DomainError);
    CHECK_THROWS_AS(make_square_well(2.0, 0.0), DomainError);
    CHECK_THROWS_AS(make_square_well(1.0, -3.0), DomainError);
}

TEST_CASE("evaluation rejects negative coordinates") {
    const auto spec = make_square_well(1.0, 1.0);
    CHECK_THROWS_AS(evaluate(spec, -1e-9), DomainError);
}

TEST_CASE("tabulated potential interpolates linearly between nodes") {
    const auto spec = make_tabulated({{0.0, -4.0}, {1.0, -2.0}, {2.0, 0.0}});
    CHECK(spec.effective_range_R == 2.0);
    CHECK(evaluate(spec, 0.0) == -4.0);
    CHECK(evaluate(spec, 0.5) == doctest::Approx(-3.0));
    CHECK(evaluate(spec, 1.0) == doctest::Approx(-2.0));
    CHECK(evaluate(spec, 1.75) == doctest::Approx(-0.5));
    CHECK(evaluate(spec, 2.0) == doctest::Approx(0.0));
    CHECK(evaluate(spec, 2.5) == 0.0);
}

TEST_CASE("tabulated potential clamps below the first node") {
    const auto spec = make_tabulated({{0.5, -1.0}, {1.0, 0.0}});
    CHECK(evaluate(spec, 0.0) == -1.0);
    CHECK(evaluate(spec, 0.25) == -1.0);
}

TEST_CASE("tabulated constructor validates the node list") {
    CHECK_THROWS_AS(make_tabulated({{0.0, -1.0}}), DomainError);
    CHECK_THROWS_AS(make_tabulated({{-0.25, -1.0}, {1.0, 0.0}}), DomainError);
    CHECK_THROWS_AS(make_tabulated({{0.0, -1.0}, {0.0, -2.0}}), DomainError);
    CHECK_THROWS_AS(make_tabulated({{1.0, -1.0}, {0.5, 0.0}}), DomainError);
}

TEST_CASE("windowed analytic profile is truncated at its cutoff") {
    const auto spec =
        make_analytic_windowed([](double x) { return -std::exp(-x); }, 2.0);
    CHECK(spec.effective_range_R == 2.0);
    CHECK(evaluate(spec, 1.0) == doctest::Approx(-std::exp(-1.0)));
    CHECK(evaluate(spec, 2.0 + 1e-12) == 0.0);
    CHECK_THROWS_AS(make_analytic_windowed(nullptr, 1.0), DomainError);
    CHECK_THROWS_AS(make_analytic_windowed([](double) { return 0.0; }, -1.0),
                    DomainError);
}
