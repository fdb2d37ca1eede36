// kernels.hpp — Ohmic spectral density and the bath correlation kernels D1, D2

#pragma once

#include <complex>

namespace qotto {

// One bosonic reservoir with Ohmic spectral density J(w) = lambda * w * exp(-w / cutoff).
// Units: k_B = hbar = 1.
struct ReservoirSpec {
    double temperature{1.0};
    double coupling{0.0};  // lambda
    double cutoff{1.0};    // Omega

    // Throws std::invalid_argument unless temperature > 0, cutoff > 0, coupling >= 0.
    void validate() const;
};

double ohmic_j(double omega, const ReservoirSpec& spec);

// psi'(z), the derivative of the digamma function. Throws std::domain_error at the
// poles z = 0, -1, -2, ...
std::complex<double> trigamma(std::complex<double> z);

// Noise kernel D1(tau) = 2 int_0^inf J(w) coth(w / 2T) cos(w tau) dw, in closed form.
double noise_kernel(double tau, const ReservoirSpec& spec);

// Dissipation kernel D2(tau) = 2 int_0^inf J(w) sin(w tau) dw = 4 lambda Omega^3 tau / (1 + (Omega tau)^2)^2.
double dissipation_kernel(double tau, const ReservoirSpec& spec);

}  // namespace qotto
