#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace scatter1d {

// Five-point centered first derivative at index i; requires i >= 2 and
// i + 2 < u.size(). Accuracy O(h^4).
double deriv5_centered(const std::vector<double>& u, std::size_t i, double h);

// Five-point one-sided first derivative at the right end index i using
// u[i-4..i]; requires i >= 4. Accuracy O(h^4).
double deriv5_backward(const std::vector<double>& u, std::size_t i, double h);

// Composite quadrature of uniformly sampled y over [0, n*h] using the
// first n+1 entries: Simpson when n is even, Simpson plus a 3/8 tail
// when n is odd. Requires n >= 4. Accuracy O(h^4).
double integrate_uniform(const std::vector<double>& y, std::size_t n, double h);

// Reduce an angle to the principal branch (-pi/2, pi/2] modulo pi.
double reduce_mod_pi(double angle);

// FNV-1a 64-bit hash of a byte string; used to fingerprint run configs.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace scatter1d
