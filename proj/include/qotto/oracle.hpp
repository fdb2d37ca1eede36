// oracle.hpp — brute-force reference for the stroke energetics
//
// The two-level system plus a handful of discretized bath modes in a truncated
// Fock space, evolved exactly through a dense eigendecomposition of
//   H = (w/2) sigma_z + sum_k e_k b_k^+ b_k + sigma_x (x) sum_k g_k (b_k^+ + b_k).
// Valid only at weak coupling and short times (t well below 2 pi / bin width).

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qotto/kernels.hpp"

namespace qotto {

struct DiscretizedBath {
    std::vector<double> frequencies;  // e_k, bin midpoints
    std::vector<double> couplings;    // g_k, real, g_k^2 = int_bin J
    int fock_cutoff{1};               // M: each mode keeps levels 0..M
    double temperature{1.0};

    std::size_t modes() const noexcept { return frequencies.size(); }
    // 2 (M + 1)^N
    std::size_t dimension() const;
};

// Total Hilbert-space dimension allowed for the dense eigendecomposition.
inline constexpr std::size_t kOracleMaxDimension = std::size_t{1} << 15;
// Product Fock states below this initial weight are dropped (remaining weight renormalized).
inline constexpr double kOracleWeightCutoff = 1e-6;
// Top-Fock-level population above this raises the truncation warning.
inline constexpr double kTruncationThreshold = 1e-4;

// N equal bins on (0, omega_max]; e_k at the midpoints, g_k^2 = int_bin J(w) dw.
DiscretizedBath discretize_bath(const ReservoirSpec& spec, int modes, double omega_max, int fock_cutoff);

struct ExactEnergetics {
    std::vector<double> times;
    std::vector<double> dES;
    std::vector<double> dEB;
    std::vector<double> EI;
    std::vector<double> trace;  // Tr rho(t)
    double max_top_population{0.0};
    bool truncation_warning{false};  // max_top_population > kTruncationThreshold
};

// Qubit starts diagonal with ground population initial_ground; bath starts in its
// truncated Gibbs state. Throws std::invalid_argument if the dimension exceeds
// kOracleMaxDimension.
ExactEnergetics exact_evolve(double initial_ground, double splitting, const DiscretizedBath& bath,
                             std::span<const double> times);

}  // namespace qotto
