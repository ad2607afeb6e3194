#pragma once

#include <stdexcept>
#include <string>

namespace scatter1d {

// Base class for all library failures. Catch this to map any solver or
// configuration problem to a process exit code.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An argument lies outside the mathematical domain of an operation
// (negative half-line coordinate, non-positive wave number, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A run configuration failed schema validation. `field` holds the
// dotted path of the offending entry.
class ConfigError : public Error {
public:
    ConfigError(const std::string& field, const std::string& what)
        : Error(field + ": " + what), field_(field) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// The integration step is too coarse for the local wave number:
// h * max(sqrt(|U - k^2|)) exceeded the stability bound.
class StabilityError : public Error {
public:
    using Error::Error;
};

// Phase-shift matching failed at both the primary and the shifted
// match point (wave function degenerate at both).
class MatchingError : public Error {
public:
    using Error::Error;
};

// Adjacent sweep points differ by >= pi/2 after unwrapping; the k grid
// is too coarse to track the branch.
class ResolutionError : public Error {
public:
    using Error::Error;
};

// A closed-form or fitted quantity sits on a pole (resonance crossing,
// tan/cot singularity); evaluate at an adjacent k instead.
class PoleError : public Error {
public:
    using Error::Error;
};

// A well parameter sits exactly on a bound-state threshold where a
// count or scattering length is not defined.
class ThresholdError : public Error {
public:
    using Error::Error;
};

// Zero-energy normalization is impossible (scattering length infinite,
// zero, or the normalized solution violates its asymptote).
class NormalizationError : public Error {
public:
    using Error::Error;
};

// The integration or k grid is too short for the requested analysis;
// extend x_max or k_max.
class GridError : public Error {
public:
    using Error::Error;
};

// Two quantities that must agree (counting routes, branch checks)
// disagree beyond tolerance.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace scatter1d
