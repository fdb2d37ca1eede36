#include "qotto/markov.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qotto/tcl2.hpp"

namespace qotto {

double bose_n(double omega, double temperature) {
    if (!(omega > 0.0) || !(temperature > 0.0)) {
        throw std::domain_error("bose_n: frequency and temperature must be positive");
    }
    return 1.0 / std::expm1(omega / temperature);
}

double markov_rate(const ReservoirSpec& reservoir, double splitting) {
    const double n = bose_n(splitting, reservoir.temperature);
    return 2.0 * std::numbers::pi * ohmic_j(splitting, reservoir) * (1.0 + 2.0 * n);
}

double markov_stationary(double splitting, double temperature) {
    if (!(splitting > 0.0) || !(temperature > 0.0)) {
        throw std::domain_error("markov_stationary: frequency and temperature must be positive");
    }
    // (1 + n) / (1 + 2n) == 1 / (1 + exp(-w / T))
    return 1.0 / (1.0 + std::exp(-splitting / temperature));
}

double markov_rho00(double t, const MarkovStroke& stroke) {
    if (t < 0.0) throw std::domain_error("markov_rho00: negative time");
    const double eq = markov_stationary(stroke.splitting, stroke.reservoir.temperature);
    const double decay = std::exp(-markov_rate(stroke.reservoir, stroke.splitting) * t);
    return eq + (stroke.initial_ground - eq) * decay;
}

StrokeSolution solve_markov_stroke(const ReservoirSpec& reservoir, double splitting,
                                   double duration, double step) {
    reservoir.validate();
    if (!(splitting > 0.0)) throw std::invalid_argument("stroke splitting must be positive");
    if (!(duration > 0.0)) throw std::invalid_argument("stroke duration must be positive");
    if (step == 0.0) step = default_step(duration);
    const std::size_t n = interval_count(duration, step);
    const std::size_t points = n + 1;
    const double h = duration / static_cast<double>(n);

    const double rate = markov_rate(reservoir, splitting);
    const double eq = markov_stationary(splitting, reservoir.temperature);

    StrokeSolution sol;
    sol.splitting = splitting;
    sol.times.resize(points);
    sol.a_vals.assign(points, -rate);
    sol.b_vals.assign(points, -rate * eq);
    sol.cumA.resize(points);
    sol.ground_slope.resize(points);
    sol.ground_offset.resize(points);
    sol.flux_slope.assign(points, 0.0);
    sol.flux_offset.assign(points, 0.0);
    sol.cum_flux_slope.assign(points, 0.0);
    sol.cum_flux_offset.assign(points, 0.0);
    for (std::size_t k = 0; k < points; ++k) {
        const double t = k == n ? duration : static_cast<double>(k) * h;
        const double decay = std::exp(-rate * t);
        sol.times[k] = t;
        sol.cumA[k] = -rate * t;
        sol.ground_slope[k] = decay;
        sol.ground_offset[k] = -eq * std::expm1(-rate * t);
    }
    return sol;
}

bool positive_work_condition(const EngineParams& params) {
    return params.omega_c / params.omega_h > params.T_c / params.T_h;
}

}  // namespace qotto
