#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "qotto/energetics.hpp"
#include "qotto/markov.hpp"
#include "qotto/quadrature.hpp"
#include "qotto/tcl2.hpp"

using namespace qotto;

namespace {

Trajectory hot_trajectory(const EngineParams& e, Backend backend) {
    const auto hot = solve_stroke(e, Leg::hot, backend);
    const auto lc = limit_cycle(stroke_map(hot), stroke_map(e, Leg::cold, backend));
    return hot.trajectory(lc.hot_ground);
}

}  // namespace

TEST_CASE("effective temperature") {
    CHECK(effective_temperature(std::numbers::e / (1.0 + std::numbers::e), 1.0 / (1.0 + std::numbers::e), 1.0) ==
          doctest::Approx(1.0).epsilon(1e-14));
    for (double T : {0.3, 1.0, 5.0}) {
        const double g = markov_stationary(0.7, T);
        CHECK(effective_temperature(g, 1.0 - g, 0.7) == doctest::Approx(T).epsilon(1e-12));
    }
    CHECK(effective_temperature(0.5, 0.5, 1.0) == std::numeric_limits<double>::infinity());
    CHECK(effective_temperature(0.4, 0.6, 1.0) < 0.0);  // population inversion
    CHECK_THROWS_AS(effective_temperature(1.0, 0.0, 1.0), std::domain_error);
}

TEST_CASE("adiabatic work") {
    EngineParams e;
    const StrokeMap hot{0.6, 0.4}, cold{0.7, 0.65};
    const auto lc = limit_cycle(hot, cold);
    const auto w = work_adiabatic(e, lc, hot, cold);
    CHECK(w.expansion == doctest::Approx(0.82 * (1.0 - hot.apply(lc.hot_ground))));
    CHECK(w.compression == doctest::Approx(0.82 * (1.0 - cold.apply(lc.cold_ground))));

    e.omega_c = e.omega_h;  // outside the engine invariants on purpose
    const auto zero = work_adiabatic(e, lc, hot, cold);
    CHECK(zero.expansion == 0.0);
    CHECK(zero.compression == 0.0);
    CHECK(work_net_I(0.3, 0.3) == 0.0);
    CHECK(work_net_II(0.1, 0.0, 0.0) == 0.1);
}

TEST_CASE("full thermalization Markov work") {
    EngineParams e;
    e.t1 = e.t2 = 4000.0;
    const auto led = evaluate_cycle(e, Backend::markov, {1.0, 1.0});
    const double excited_h = 1.0 - markov_stationary(1.0, 5.0);
    const double excited_c = 1.0 - markov_stationary(0.18, 1.0);
    CHECK(led.W_ad1 == doctest::Approx(0.82 * excited_h).epsilon(1e-12));
    CHECK(led.W_ad2 == doctest::Approx(0.82 * excited_c).epsilon(1e-12));
    CHECK(led.W_I < 0.0);
}

TEST_CASE("all energies vanish at t = 0 and without coupling") {
    EngineParams e;
    const auto traj = hot_trajectory(e, Backend::tcl2);
    CHECK(system_energy_change(traj, 0) == 0.0);
    CHECK(reservoir_energy_change(traj, 0) == 0.0);
    CHECK(interaction_energy(traj, 0) == 0.0);

    const auto off = solve_tcl2_stroke({5.0, 0.0, 0.4}, 1.0, 5.0).trajectory(0.6);
    const auto flow = energy_flow(off);
    for (std::size_t k = 0; k < off.size(); k += 50) {
        CHECK(system_energy_change(off, k) == 0.0);
        CHECK(reservoir_energy_change(off, k) == 0.0);
        CHECK(interaction_energy(off, k) == 0.0);
        CHECK(flow[k].second == 0.0);
    }
}

TEST_CASE("energy conservation on both strokes and both backends") {
    EngineParams e;
    for (auto backend : {Backend::tcl2, Backend::markov}) {
        const auto hot = solve_stroke(e, Leg::hot, backend);
        const auto cold = solve_stroke(e, Leg::cold, backend);
        const auto lc = limit_cycle(stroke_map(hot), stroke_map(cold));
        for (const auto& [sol, p] : {std::pair{&hot, lc.hot_ground}, std::pair{&cold, lc.cold_ground}}) {
            const auto traj = sol->trajectory(p);
            for (std::size_t k = 0; k < traj.size(); ++k) {
                const double s = system_energy_change(traj, k) + reservoir_energy_change(traj, k) +
                                 interaction_energy(traj, k);
                CHECK(std::abs(s) < 1e-8 * traj.splitting);
            }
        }
    }
}

TEST_CASE("energy flow integrates back to the reservoir energy change") {
    EngineParams e;
    const auto traj = hot_trajectory(e, Backend::tcl2);
    const auto flow = energy_flow(traj);
    std::vector<double> theta(flow.size());
    for (std::size_t k = 0; k < flow.size(); ++k) theta[k] = flow[k].second;
    const auto integrated = cumulative_simpson(theta, traj.times[1] - traj.times[0]);
    double scale = 0.0;
    for (std::size_t k = 0; k < traj.size(); ++k) scale = std::max(scale, std::abs(reservoir_energy_change(traj, k)));
    for (std::size_t k = 0; k < traj.size(); ++k) {
        CHECK(std::abs(integrated[k] - reservoir_energy_change(traj, k)) <= 1e-8 * scale);
    }
}

TEST_CASE("Markov interaction energy vanishes and the work definitions coincide") {
    EngineParams e;
    const auto traj = hot_trajectory(e, Backend::markov);
    for (std::size_t k = 0; k < traj.size(); ++k) CHECK(std::abs(interaction_energy(traj, k)) < 1e-10);
    const auto led = evaluate_cycle(e, Backend::markov);
    CHECK(led.E_I_h == 0.0);
    CHECK(led.E_I_c == 0.0);
    CHECK(led.W_II == led.W_I);
}

TEST_CASE("Markov stroke from equilibrium changes nothing") {
    const ReservoirSpec hot{5.0, 0.01, 0.4};
    const auto traj = solve_markov_stroke(hot, 1.0, 500.0, 0.5).trajectory(markov_stationary(1.0, 5.0));
    CHECK(std::abs(system_energy_change(traj, traj.size() - 1)) < 1e-15);
}

TEST_CASE("reference point signs") {
    EngineParams e;
    const auto led = evaluate_cycle(e, Backend::tcl2);
    CHECK(led.dES_h > 0.0);  // hot bath heats the system
    CHECK(led.E_I_h < 0.0);
    CHECK(led.E_I_c < 0.0);
    CHECK(led.W_II <= led.W_I);
    CHECK(led.W_II < 0.0);
    CHECK(led.eta_O == doctest::Approx(0.82).epsilon(1e-15));
    CHECK(led.eta_C == doctest::Approx(0.8).epsilon(1e-15));

    e.t1 = 2.0;
    CHECK(evaluate_cycle(e, Backend::tcl2).W_I > 0.0);
}

TEST_CASE("Otto efficiency does not depend on the dynamics") {
    EngineParams e;
    for (auto backend : {Backend::tcl2, Backend::markov}) {
        for (double t1 : {1.0, 7.5}) {
            e.t1 = t1;
            CHECK(evaluate_cycle(e, backend).eta_O == 1.0 - 0.18);
        }
    }
}

TEST_CASE("ledger pieces agree with the trajectory") {
    EngineParams e;
    const auto led = evaluate_cycle(e, Backend::tcl2);
    const auto traj = hot_trajectory(e, Backend::tcl2);
    const std::size_t last = traj.size() - 1;
    CHECK(led.dES_h == doctest::Approx(system_energy_change(traj, last)).epsilon(1e-12));
    CHECK(led.dEB_h == doctest::Approx(reservoir_energy_change(traj, last)).epsilon(1e-12));
    CHECK(led.E_I_h == doctest::Approx(interaction_energy(traj, last)).epsilon(1e-12));
}
