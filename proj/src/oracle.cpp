#include "qotto/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace qotto {

std::size_t DiscretizedBath::dimension() const {
    std::size_t levels = 1;
    for (std::size_t k = 0; k < modes(); ++k) {
        levels *= static_cast<std::size_t>(fock_cutoff + 1);
        if (levels > kOracleMaxDimension) return 2 * levels;  // already out of bounds
    }
    return 2 * levels;
}

namespace {

// int_0^w lambda x exp(-x / Omega) dx
double ohmic_primitive(double w, const ReservoirSpec& spec) {
    const double x = w / spec.cutoff;
    return spec.coupling * spec.cutoff * spec.cutoff * (-std::expm1(-x) - x * std::exp(-x));
}

}  // namespace

DiscretizedBath discretize_bath(const ReservoirSpec& spec, int modes, double omega_max, int fock_cutoff) {
    spec.validate();
    if (modes < 1) throw std::invalid_argument("discretize_bath: need at least one mode");
    if (!(omega_max > 0.0)) throw std::invalid_argument("discretize_bath: omega_max must be positive");
    if (fock_cutoff < 1) throw std::invalid_argument("discretize_bath: Fock cutoff must be >= 1");

    DiscretizedBath bath;
    bath.fock_cutoff = fock_cutoff;
    bath.temperature = spec.temperature;
    const double width = omega_max / modes;
    for (int k = 0; k < modes; ++k) {
        const double lo = k * width;
        const double hi = (k + 1) * width;
        bath.frequencies.push_back(0.5 * (lo + hi));
        const double weight = ohmic_primitive(hi, spec) - ohmic_primitive(lo, spec);
        bath.couplings.push_back(std::sqrt(std::max(weight, 0.0)));
    }
    return bath;
}

ExactEnergetics exact_evolve(double initial_ground, double splitting, const DiscretizedBath& bath,
                             std::span<const double> times) {
    if (!(initial_ground >= 0.0 && initial_ground <= 1.0)) {
        throw std::invalid_argument("exact_evolve: initial ground population must lie in [0, 1]");
    }
    const std::size_t dim = bath.dimension();
    if (dim > kOracleMaxDimension) throw std::invalid_argument("exact_evolve: Hilbert space too large");

    const std::size_t n_modes = bath.modes();
    const int levels = bath.fock_cutoff + 1;
    const std::size_t bath_dim = dim / 2;
    const auto idim = static_cast<Eigen::Index>(dim);

    // Basis index = q * bath_dim + sum_k n_k levels^k; q = 0 is the lower level.
    auto occupation = [&](std::size_t b, std::size_t k) {
        for (std::size_t j = 0; j < k; ++j) b /= static_cast<std::size_t>(levels);
        return static_cast<int>(b % static_cast<std::size_t>(levels));
    };
    std::vector<std::size_t> stride(n_modes, 1);
    for (std::size_t k = 1; k < n_modes; ++k) stride[k] = stride[k - 1] * static_cast<std::size_t>(levels);

    Eigen::VectorXd h_sys(idim), h_bath(idim);
    Eigen::MatrixXd h_int = Eigen::MatrixXd::Zero(idim, idim);
    for (std::size_t q = 0; q < 2; ++q) {
        for (std::size_t b = 0; b < bath_dim; ++b) {
            const std::size_t i = q * bath_dim + b;
            h_sys(static_cast<Eigen::Index>(i)) = q == 0 ? -0.5 * splitting : 0.5 * splitting;
            double eb = 0.0;
            for (std::size_t k = 0; k < n_modes; ++k) {
                const int n = occupation(b, k);
                eb += bath.frequencies[k] * n;
                if (n < bath.fock_cutoff) {
                    // sigma_x (x) g_k b_k^+ : (q, n) -> (1 - q, n + 1)
                    const std::size_t j = (1 - q) * bath_dim + b + stride[k];
                    const double amp = bath.couplings[k] * std::sqrt(static_cast<double>(n + 1));
                    h_int(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) += amp;
                    h_int(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) += amp;
                }
            }
            h_bath(static_cast<Eigen::Index>(i)) = eb;
        }
    }

    // Truncated Gibbs marginals per mode.
    std::vector<std::vector<double>> gibbs(n_modes, std::vector<double>(levels));
    for (std::size_t k = 0; k < n_modes; ++k) {
        double z = 0.0;
        for (int n = 0; n < levels; ++n) {
            gibbs[k][n] = std::exp(-bath.frequencies[k] * n / bath.temperature);
            z += gibbs[k][n];
        }
        for (auto& p : gibbs[k]) p /= z;
    }
    Eigen::VectorXd weights(idim);
    double total = 0.0;
    for (std::size_t q = 0; q < 2; ++q) {
        const double pq = q == 0 ? initial_ground : 1.0 - initial_ground;
        for (std::size_t b = 0; b < bath_dim; ++b) {
            double w = pq;
            for (std::size_t k = 0; k < n_modes; ++k) w *= gibbs[k][occupation(b, k)];
            if (w < kOracleWeightCutoff) w = 0.0;
            weights(static_cast<Eigen::Index>(q * bath_dim + b)) = w;
            total += w;
        }
    }
    weights /= total;

    Eigen::MatrixXd hamiltonian = h_int;
    hamiltonian.diagonal() += h_sys + h_bath;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hamiltonian);
    if (solver.info() != Eigen::Success) throw std::runtime_error("exact_evolve: eigendecomposition failed");
    const Eigen::MatrixXd& vecs = solver.eigenvectors();
    const Eigen::VectorXd& energies = solver.eigenvalues();

    // Everything in the energy eigenbasis: X' = V^T X V.
    auto rotate_diagonal = [&](const Eigen::VectorXd& d) -> Eigen::MatrixXd {
        return vecs.transpose() * (d.asDiagonal() * vecs);
    };
    const Eigen::MatrixXd state = rotate_diagonal(weights);
    // <O>(t) = Re z^+ (O' o rho') z with z_i = exp(i E_i t).
    const Eigen::MatrixXd m_sys = rotate_diagonal(h_sys).cwiseProduct(state);
    const Eigen::MatrixXd m_bath = rotate_diagonal(h_bath).cwiseProduct(state);
    const Eigen::MatrixXd m_int = (vecs.transpose() * (h_int * vecs)).cwiseProduct(state);
    std::vector<Eigen::MatrixXd> m_top;
    double top_initial = 0.0;
    for (std::size_t k = 0; k < n_modes; ++k) {
        Eigen::VectorXd proj(idim);
        for (std::size_t i = 0; i < dim; ++i) {
            proj(static_cast<Eigen::Index>(i)) = occupation(i % bath_dim, k) == bath.fock_cutoff ? 1.0 : 0.0;
        }
        m_top.push_back(rotate_diagonal(proj).cwiseProduct(state));
        top_initial = std::max(top_initial, proj.dot(weights));
    }

    auto expect = [](const Eigen::MatrixXd& m, const Eigen::VectorXd& c, const Eigen::VectorXd& s) {
        return c.dot(m * c) + s.dot(m * s);
    };

    ExactEnergetics out;
    out.max_top_population = top_initial;
    const double e_sys0 = weights.dot(h_sys);
    const double e_bath0 = weights.dot(h_bath);
    for (const double t : times) {
        out.times.push_back(t);
        out.trace.push_back(state.trace());
        if (t == 0.0) {
            // Factorized start: no change yet and <H_I> = 0 exactly.
            out.dES.push_back(0.0);
            out.dEB.push_back(0.0);
            out.EI.push_back(h_int.diagonal().dot(weights));
            continue;
        }
        const Eigen::VectorXd c = (energies * t).array().cos().matrix();
        const Eigen::VectorXd s = (energies * t).array().sin().matrix();
        const double e_sys = expect(m_sys, c, s);
        const double e_bath = expect(m_bath, c, s);
        const double e_int = expect(m_int, c, s);
        out.dES.push_back(e_sys - e_sys0);
        out.dEB.push_back(e_bath - e_bath0);
        out.EI.push_back(e_int);
        for (const auto& m : m_top) out.max_top_population = std::max(out.max_top_population, expect(m, c, s));
    }
    out.truncation_warning = out.max_top_population > kTruncationThreshold;
    return out;
}

}  // namespace qotto
