// energetics.hpp — energy bookkeeping on the limit cycle
//
// Conventions: H_S = (w/2) sigma_z with |0> the lower level, so the system energy
// change during a stroke is w (rho11(t) - rho11(0)). The reservoir energy change
// from full counting statistics is
//   dE_B(t) = w (rho00(t) - rho00(0)) + int_0^t [(2 rho00 - 1) D1 sin(w s) + D2 cos(w s)] ds,
// and the interaction energy follows from conservation, E_I = -dE_S - dE_B, which
// leaves E_I(t) = -(correction integral). The Markov backend has no correction term.

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qotto/cycle.hpp"
#include "qotto/engine.hpp"
#include "qotto/stroke.hpp"

namespace qotto {

struct AdiabaticWork {
    double expansion{0.0};    // W_ad1, done by the system while w goes omega_h -> omega_c
    double compression{0.0};  // W_ad2, done on the system while w goes omega_c -> omega_h
};

// W_ad1 = (omega_h - omega_c) [P_h rho^h_{0,11}(t1) + (1 - P_h) rho^h_{1,11}(t1)], W_ad2 mirrored.
AdiabaticWork work_adiabatic(const EngineParams& engine, const LimitCycle& cycle, const StrokeMap& hot,
                             const StrokeMap& cold);

inline double work_net_I(double w_ad1, double w_ad2) { return w_ad1 - w_ad2; }
inline double work_net_II(double w_I, double interaction_hot, double interaction_cold) {
    return w_I + interaction_hot + interaction_cold;
}

// Per-time quantities along a trajectory started at the limit-cycle population of its
// stroke; k indexes the trajectory grid. All three vanish at k = 0.
double system_energy_change(const Trajectory& traj, std::size_t k);
double reservoir_energy_change(const Trajectory& traj, std::size_t k);
double interaction_energy(const Trajectory& traj, std::size_t k);

// theta(t) = d dE_B / dt from the analytic rate: w (a rho00 - b) + correction flux.
// Positive when energy flows into the reservoir.
std::vector<std::pair<double, double>> energy_flow(const Trajectory& traj);

// w / ln(rho00 / rho11). +infinity when the populations agree within 1e-12;
// std::domain_error if either population is not positive.
double effective_temperature(double rho00, double rho11, double omega);

struct EnergyLedger {
    LimitCycle cycle;
    double W_ad1{0.0};
    double W_ad2{0.0};
    double W_I{0.0};
    double W_II{0.0};
    double E_I_h{0.0};  // interaction energy at the end of the hot stroke
    double E_I_c{0.0};
    double dES_h{0.0};
    double dES_c{0.0};
    double dEB_h{0.0};
    double dEB_c{0.0};
    double eta_O{0.0};
    double eta_C{0.0};
};

// What the cycle bookkeeping needs from a solved stroke: its end-point map and the
// final correction integral as an affine function of the initial ground population.
struct StrokeEnds {
    StrokeMap map;
    double flux_slope{0.0};
    double flux_offset{0.0};

    // Throws PositivityViolation.
    static StrokeEnds of(const StrokeSolution& solution);
    double flux_integral(double p) const { return p * flux_slope + flux_offset; }
};

// Full-cycle bookkeeping from two solved strokes. Throws PositivityViolation or DegenerateCycle.
EnergyLedger energy_ledger(const EngineParams& engine, const StrokeEnds& hot, const StrokeEnds& cold);
EnergyLedger energy_ledger(const EngineParams& engine, const StrokeSolution& hot,
                           const StrokeSolution& cold);

struct CycleOptions {
    double hot_step{0.0};  // 0 selects default_step(t1)
    double cold_step{0.0};
};

EnergyLedger evaluate_cycle(const EngineParams& engine, Backend backend, const CycleOptions& options = {});

}  // namespace qotto
