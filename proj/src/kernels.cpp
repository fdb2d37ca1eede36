#include "qotto/kernels.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace qotto {

void ReservoirSpec::validate() const {
    if (!(temperature > 0.0)) throw std::invalid_argument("reservoir temperature must be positive");
    if (!(cutoff > 0.0)) throw std::invalid_argument("reservoir cutoff must be positive");
    if (!(coupling >= 0.0)) throw std::invalid_argument("reservoir coupling must be nonnegative");
}

double ohmic_j(double omega, const ReservoirSpec& spec) {
    if (omega < 0.0) throw std::domain_error("ohmic_j: negative frequency");
    return spec.coupling * omega * std::exp(-omega / spec.cutoff);
}

std::complex<double> trigamma(std::complex<double> z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
        throw std::domain_error("trigamma: pole at nonpositive integer");
    }

    // psi'(z) = psi'(z + 1) + 1 / z^2
    std::complex<double> acc{0.0, 0.0};
    while (z.real() < 10.0) {
        acc += 1.0 / (z * z);
        z += 1.0;
    }

    // Asymptotic series 1/z + 1/(2 z^2) + sum_k B_{2k} / z^{2k+1}, k = 1..6.
    static constexpr std::array<double, 6> bernoulli{
        1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0};
    const std::complex<double> inv = 1.0 / z;
    const std::complex<double> inv2 = inv * inv;
    std::complex<double> series{0.0, 0.0};
    // Horner in 1/z^2, highest order first.
    for (auto it = bernoulli.rbegin(); it != bernoulli.rend(); ++it) {
        series = series * inv2 + *it;
    }
    series *= inv2 * inv;
    return acc + inv + 0.5 * inv2 + series;
}

double noise_kernel(double tau, const ReservoirSpec& spec) {
    if (tau < 0.0) throw std::domain_error("noise_kernel: negative lag");
    if (spec.coupling == 0.0) return 0.0;
    const double W = spec.cutoff;
    const double T = spec.temperature;
    const double x2 = (W * tau) * (W * tau);
    const double zero_point = W * W * (x2 - 1.0) / ((1.0 + x2) * (1.0 + x2));
    const std::complex<double> z{T / W, T * tau};
    const double thermal = 2.0 * T * T * trigamma(z).real();
    return 2.0 * spec.coupling * (zero_point + thermal);
}

double dissipation_kernel(double tau, const ReservoirSpec& spec) {
    if (tau < 0.0) throw std::domain_error("dissipation_kernel: negative lag");
    const double W = spec.cutoff;
    const double x2 = (W * tau) * (W * tau);
    return 4.0 * spec.coupling * W * W * W * tau / ((1.0 + x2) * (1.0 + x2));
}

}  // namespace qotto
