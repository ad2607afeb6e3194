#include "scatter1d/observables.hpp"

#include <cmath>
#include <numbers>

#include "scatter1d/errors.hpp"

namespace scatter1d {

using cplx = std::complex<double>;

AmplitudeSet amplitudes_from_phase_shifts(double k, double delta0,
                                          double delta1) {
    if (!(k > 0.0)) throw DomainError("amplitudes require k > 0");
    AmplitudeSet a;
    a.k = k;
    a.delta0 = delta0;
    a.delta1 = delta1;
    a.f0 = k * std::exp(cplx(0.0, delta0)) * std::sin(delta0);
    a.f1 = k * std::exp(cplx(0.0, delta1)) * std::sin(delta1);
    a.f_plus = a.f0 + a.f1;
    a.f_minus = a.f0 - a.f1;
    a.sigma_plus = std::norm(a.f_plus) / (k * k);
    a.sigma_minus = std::norm(a.f_minus) / (k * k);
    a.sigma_tot = a.sigma_plus + a.sigma_minus;
    const cplx i(0.0, 1.0);
    a.T_coef = 1.0 + i / k * a.f_plus;
    a.R_coef = i / k * a.f_minus;
    return a;
}

double cross_section_from_phases(double delta0, double delta1) {
    double s0 = std::sin(delta0), s1 = std::sin(delta1);
    return 2.0 * (s0 * s0 + s1 * s1);
}

double optical_theorem_residual(const AmplitudeSet& a) {
    return a.sigma_tot - 2.0 / a.k * a.f_plus.imag();
}

std::complex<double> asymptotic_waveform(const AmplitudeSet& a, double x) {
    if (x == 0.0)
        throw DomainError("asymptotic waveform undefined at x = 0");
    const double x0 = std::abs(x);
    const cplx i(0.0, 1.0);
    const cplx f_eps = x > 0.0 ? a.f_plus : a.f_minus;
    return std::exp(i * a.k * x) + i / a.k * f_eps * std::exp(i * a.k * x0);
}

std::complex<double> asymptotic_waveform_partial_wave(const AmplitudeSet& a,
                                                      double x) {
    if (x == 0.0)
        throw DomainError("asymptotic waveform undefined at x = 0");
    const double x0 = std::abs(x);
    const double eps = x > 0.0 ? 1.0 : -1.0;
    const cplx i(0.0, 1.0);
    const cplx A0 = std::exp(i * a.delta0);
    const cplx A1 = -i * std::exp(i * a.delta1);
    return A0 * std::cos(a.k * x0 + a.delta0) +
           eps * A1 *
               std::cos(a.k * x0 + std::numbers::pi / 2.0 + a.delta1);
}

}  // namespace scatter1d
