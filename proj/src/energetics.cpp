#include "qotto/energetics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qotto {

AdiabaticWork work_adiabatic(const EngineParams& engine, const LimitCycle& cycle, const StrokeMap& hot,
                             const StrokeMap& cold) {
    const double gap = engine.omega_h - engine.omega_c;
    const double excited_after_hot = 1.0 - hot.apply(cycle.hot_ground);
    const double excited_after_cold = 1.0 - cold.apply(cycle.cold_ground);
    return {gap * excited_after_hot, gap * excited_after_cold};
}

double system_energy_change(const Trajectory& traj, std::size_t k) {
    return traj.splitting * (traj.rho11(k) - traj.rho11(0));
}

double reservoir_energy_change(const Trajectory& traj, std::size_t k) {
    return traj.splitting * (traj.rho00[k] - traj.rho00[0]) + traj.cum_flux[k];
}

double interaction_energy(const Trajectory& traj, std::size_t k) {
    return -system_energy_change(traj, k) - reservoir_energy_change(traj, k);
}

std::vector<std::pair<double, double>> energy_flow(const Trajectory& traj) {
    std::vector<std::pair<double, double>> out;
    out.reserve(traj.size());
    for (std::size_t k = 0; k < traj.size(); ++k) {
        const double d_rho00 = traj.a_vals[k] * traj.rho00[k] - traj.b_vals[k];
        out.emplace_back(traj.times[k], traj.splitting * d_rho00 + traj.flux[k]);
    }
    return out;
}

double effective_temperature(double rho00, double rho11, double omega) {
    if (!(rho00 > 0.0) || !(rho11 > 0.0)) {
        throw std::domain_error("effective_temperature: populations must be positive");
    }
    if (std::abs(rho00 - rho11) <= 1e-12) return std::numeric_limits<double>::infinity();
    return omega / std::log(rho00 / rho11);
}

StrokeEnds StrokeEnds::of(const StrokeSolution& solution) {
    return {stroke_map(solution), solution.cum_flux_slope.back(), solution.cum_flux_offset.back()};
}

EnergyLedger energy_ledger(const EngineParams& engine, const StrokeEnds& hot, const StrokeEnds& cold) {
    EnergyLedger led;
    led.cycle = limit_cycle(hot.map, cold.map);
    const double ph = led.cycle.hot_ground;
    const double pc = led.cycle.cold_ground;

    const auto work = work_adiabatic(engine, led.cycle, hot.map, cold.map);
    led.W_ad1 = work.expansion;
    led.W_ad2 = work.compression;
    led.W_I = work_net_I(led.W_ad1, led.W_ad2);

    const double hot_end = hot.map.apply(ph);
    const double cold_end = cold.map.apply(pc);
    led.dES_h = -engine.omega_h * (hot_end - ph);
    led.dES_c = -engine.omega_c * (cold_end - pc);
    led.dEB_h = engine.omega_h * (hot_end - ph) + hot.flux_integral(ph);
    led.dEB_c = engine.omega_c * (cold_end - pc) + cold.flux_integral(pc);
    led.E_I_h = -led.dES_h - led.dEB_h;
    led.E_I_c = -led.dES_c - led.dEB_c;
    led.W_II = work_net_II(led.W_I, led.E_I_h, led.E_I_c);

    led.eta_O = engine.otto_efficiency();
    led.eta_C = engine.carnot_efficiency();
    return led;
}

EnergyLedger energy_ledger(const EngineParams& engine, const StrokeSolution& hot,
                           const StrokeSolution& cold) {
    return energy_ledger(engine, StrokeEnds::of(hot), StrokeEnds::of(cold));
}

EnergyLedger evaluate_cycle(const EngineParams& engine, Backend backend, const CycleOptions& options) {
    engine.validate();
    const auto hot = solve_stroke(engine, Leg::hot, backend, options.hot_step);
    const auto cold = solve_stroke(engine, Leg::cold, backend, options.cold_step);
    return energy_ledger(engine, hot, cold);
}

}  // namespace qotto
