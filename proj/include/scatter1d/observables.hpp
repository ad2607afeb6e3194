#pragma once

#include <complex>

namespace scatter1d {

// Everything derivable from the two phase shifts at one wave number.
// Invariants (all enforced by construction, tested to 1e-12):
//   f_L      = k e^{i delta_L} sin(delta_L)
//   f_plus   = f0 + f1,  f_minus = f0 - f1
//   sigma_e  = |f(e)|^2 / k^2,  sigma_tot = sigma_plus + sigma_minus
//            = 2 (sin^2 delta0 + sin^2 delta1) = (2/k) Im f_plus
//   T = 1 + (i/k) f_plus = (e^{2i delta0}+e^{2i delta1})/2
//   R = (i/k) f_minus    = (e^{2i delta0}-e^{2i delta1})/2
//   |T|^2 + |R|^2 = 1
// sigma_plus is not |T|^2: the forward cross section and the
// transmission probability are distinct quantities; both are exposed.
struct AmplitudeSet {
    double k;
    double delta0;
    double delta1;
    std::complex<double> f0, f1;
    std::complex<double> f_plus, f_minus;
    double sigma_plus, sigma_minus, sigma_tot;
    std::complex<double> T_coef, R_coef;
};

// Build the set from (k, delta0, delta1). Throws DomainError for k <= 0.
AmplitudeSet amplitudes_from_phase_shifts(double k, double delta0,
                                          double delta1);

// Total cross section directly from the phase shifts,
// 2 (sin^2 delta0 + sin^2 delta1); the independent route against
// sigma_tot = (|f_plus|^2 + |f_minus|^2)/k^2 stored in the set.
double cross_section_from_phases(double delta0, double delta1);

// sigma_tot - (2/k) Im f_plus; an algebraic identity, zero to rounding.
double optical_theorem_residual(const AmplitudeSet& a);

// Asymptotic wave function at signed position x (epsilon = sign x):
//   plane-wave route:   e^{ikx} + (i/k) f(eps) e^{ik|x|}
//   partial-wave route: sum_L eps^L A_L cos(k|x| + L pi/2 + delta_L),
//                       A_L = (-i)^L e^{i delta_L}
// The two agree identically; both are exposed for cross-validation.
// Throws DomainError at x = 0 where the direction is undefined.
std::complex<double> asymptotic_waveform(const AmplitudeSet& a, double x);
std::complex<double> asymptotic_waveform_partial_wave(const AmplitudeSet& a,
                                                      double x);

}  // namespace scatter1d
