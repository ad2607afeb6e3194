#include "scatter1d/square_well.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "scatter1d/errors.hpp"
#include "scatter1d/numerics.hpp"

namespace scatter1d {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTanOverflow = 1e8;

EffectiveRangeParams from_a(Channel channel, double a, double r) {
    EffectiveRangeParams p;
    p.channel = channel;
    p.a = a;
    p.inv_a = 1.0 / a;
    p.r = r;
    p.method = ERMethod::oracle;
    p.near_threshold = std::abs(p.inv_a) < 1e-6;
    return p;
}

}  // namespace

double beta_k(const SquareWellParams& p, double k) {
    return std::hypot(k, p.beta0);
}

double k_cot_delta1(const SquareWellParams& p, double k) {
    if (!(k > 0.0)) throw DomainError("k_cot_delta1 requires k > 0");
    const double b = beta_k(p, k);
    const double tb = std::tan(b * p.R);
    const double tk = std::tan(k * p.R);
    double num, den, scale;
    if (std::abs(tb) > kTanOverflow) {
        // Divide through by tan(bR) so the resonance of the interior
        // tangent cancels instead of producing inf - inf.
        num = k * k * tk + k * b / tb;
        den = k - b * tk / tb;
        scale = std::max(std::abs(k), std::abs(b * tk / tb));
    } else {
        num = k * k * tb * tk + k * b;
        den = k * tb - b * tk;
        scale = std::max(std::abs(k * tb), std::abs(b * tk));
    }
    if (std::abs(den) < 1e-14 * std::max(1.0, scale))
        throw PoleError("k cot(delta) crosses a resonance pole at k=" +
                        std::to_string(k) + "; evaluate the phase directly");
    return num / den;
}

double k_tan_delta0(const SquareWellParams& p, double k) {
    if (!(k > 0.0)) throw DomainError("k_tan_delta0 requires k > 0");
    const double b = beta_k(p, k);
    const double tb = std::tan(b * p.R);
    const double tk = std::tan(k * p.R);
    double num, den, scale;
    if (std::abs(tb) > kTanOverflow) {
        num = k * b - k * k * tk / tb;
        den = k / tb + b * tk;
        scale = std::max(std::abs(k / tb), std::abs(b * tk));
    } else {
        num = k * b * tb - k * k * tk;
        den = k + b * tb * tk;
        scale = std::max(std::abs(k), std::abs(b * tb * tk));
    }
    if (std::abs(den) < 1e-14 * std::max(1.0, scale))
        throw PoleError("k tan(delta) crosses a resonance pole at k=" +
                        std::to_string(k) + "; evaluate the phase directly");
    return num / den;
}

double phase_shift(const SquareWellParams& p, Channel channel, double k) {
    if (!(k > 0.0)) throw DomainError("phase_shift requires k > 0");
    const double b = beta_k(p, k);
    const double sb = std::sin(b * p.R);
    const double cb = std::cos(b * p.R);
    // Log-derivative matching written through atan2: the full phase
    // k x + delta at x = R, then the plane-wave phase k R removed.
    const double full = channel == Channel::odd ? std::atan2(k * sb, b * cb)
                                                : std::atan2(b * sb, k * cb);
    return reduce_mod_pi(full - k * p.R);
}

double threshold_distance(const SquareWellParams& p, Channel channel) {
    const double x = p.beta0 * p.R;
    // Window boundaries: odd at (2n+1) pi/2, even at n pi.
    const double d = channel == Channel::odd
                         ? std::remainder(x - kPi / 2.0, kPi)
                         : std::remainder(x, kPi);
    return std::abs(d);
}

EffectiveRangeParams scattering_params(const SquareWellParams& p,
                                       Channel channel) {
    const double b0 = p.beta0, R = p.R;
    if (threshold_distance(p, channel) < 1e-12) {
        // Threshold limit: the scattering length diverges and the
        // effective range tends to the well range.
        auto out = from_a(channel, std::numeric_limits<double>::infinity(), R);
        out.inv_a = 0.0;
        out.near_threshold = true;
        return out;
    }
    const double tb = std::tan(b0 * R);
    if (channel == Channel::odd) {
        const double a = R - tb / b0;
        const double s = std::sin(b0 * R);
        const double r = 2.0 * R - 2.0 * R * R / a +
                         2.0 * R * R * R / (3.0 * a * a) +
                         (1.0 - R / a) * (1.0 - R / a) *
                             (1.0 / (b0 * tb) - R / (s * s));
        return from_a(channel, a, r);
    }
    const double a = R + 1.0 / (b0 * tb);
    const double c = std::cos(b0 * R);
    const double r = 2.0 * R - 2.0 * R * R / a +
                     2.0 * R * R * R / (3.0 * a * a) -
                     (1.0 - R / a) * (1.0 - R / a) * (tb / b0 + R / (c * c));
    return from_a(channel, a, r);
}

int bound_state_count(const SquareWellParams& p, Channel channel) {
    const double x = p.beta0 * p.R;
    if (!(x > 0.0)) throw DomainError("bound_state_count requires beta0*R > 0");
    if (threshold_distance(p, channel) < 1e-12)
        throw ThresholdError("beta0*R=" + std::to_string(x) +
                             " sits on a window boundary; a new bound state "
                             "is appearing");
    if (channel == Channel::odd)
        return static_cast<int>(std::floor(x / kPi + 0.5));
    return static_cast<int>(std::ceil(x / kPi));
}

}  // namespace scatter1d
