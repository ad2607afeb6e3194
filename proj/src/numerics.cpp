#include "scatter1d/numerics.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

namespace scatter1d {

double deriv5_centered(const std::vector<double>& u, std::size_t i, double h) {
    assert(i >= 2 && i + 2 < u.size());
    return (u[i - 2] - 8.0 * u[i - 1] + 8.0 * u[i + 1] - u[i + 2]) / (12.0 * h);
}

double deriv5_backward(const std::vector<double>& u, std::size_t i, double h) {
    assert(i >= 4 && i < u.size());
    return (25.0 * u[i] - 48.0 * u[i - 1] + 36.0 * u[i - 2] -
            16.0 * u[i - 3] + 3.0 * u[i - 4]) /
           (12.0 * h);
}

double integrate_uniform(const std::vector<double>& y, std::size_t n, double h) {
    assert(n >= 4 && n < y.size());
    std::size_t m = n;
    double tail = 0.0;
    if (m % 2 != 0) {
        // Newton-Cotes 3/8 rule on the last three intervals keeps O(h^4).
        m -= 3;
        tail = 3.0 * h / 8.0 *
               (y[m] + 3.0 * y[m + 1] + 3.0 * y[m + 2] + y[m + 3]);
    }
    double odd = 0.0, even = 0.0;
    for (std::size_t i = 1; i < m; i += 2) odd += y[i];
    for (std::size_t i = 2; i < m; i += 2) even += y[i];
    return h / 3.0 * (y[0] + 4.0 * odd + 2.0 * even + y[m]) + tail;
}

double reduce_mod_pi(double angle) {
    double d = std::remainder(angle, std::numbers::pi);
    if (d <= -std::numbers::pi / 2.0) d += std::numbers::pi;
    return d;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    return hash;
}

}  // namespace scatter1d
