#include "qotto/report.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "qotto/cycle.hpp"
#include "qotto/energetics.hpp"
#include "qotto/oracle.hpp"
#include "qotto/sweep.hpp"

namespace qotto {

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0.0) return "0";  // folds -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

// Error text must not break the CSV row.
std::string csv_safe(std::string s) {
    for (char& ch : s) {
        if (ch == ',' || ch == '\n' || ch == '\r' || ch == '"') ch = ';';
    }
    return s;
}

struct HotStroke {
    LimitCycle cycle;
    StrokeSolution solution;
};

HotStroke hot_stroke_at_limit_cycle(const RunConfig& config, Backend backend) {
    const auto& engine = config.engine;
    engine.validate();
    HotStroke hs;
    hs.solution = solve_stroke(engine, Leg::hot, backend, config.step);
    const auto cold = solve_stroke(engine, Leg::cold, backend, config.step);
    hs.cycle = limit_cycle(stroke_map(hs.solution), stroke_map(cold));
    return hs;
}

double safe_temperature(double rho00, double rho11, double omega) {
    if (!(rho00 > 0.0) || !(rho11 > 0.0)) return std::nan("");
    return effective_temperature(rho00, rho11, omega);
}

}  // namespace

void write_dynamics(const RunConfig& config, std::ostream& out) {
    const auto hs = hot_stroke_at_limit_cycle(config, config.backend);
    const auto traj = hs.solution.trajectory(hs.cycle.hot_ground);
    const auto flow = energy_flow(traj);
    out << "t,rho00,rho11,T_eff,dES,dEB,EI,theta\n";
    for (std::size_t k = 0; k < traj.size(); ++k) {
        out << format_number(traj.times[k]) << ',' << format_number(traj.rho00[k]) << ','
            << format_number(traj.rho11(k)) << ','
            << format_number(safe_temperature(traj.rho00[k], traj.rho11(k), traj.splitting)) << ','
            << format_number(system_energy_change(traj, k)) << ','
            << format_number(reservoir_energy_change(traj, k)) << ','
            << format_number(interaction_energy(traj, k)) << ',' << format_number(flow[k].second) << '\n';
    }
}

void write_sweep(const RunConfig& config, std::ostream& out) {
    const bool with_pairs = !config.omega_pairs.empty();
    std::vector<std::pair<double, double>> pairs = config.omega_pairs;
    if (!with_pairs) pairs.emplace_back(config.engine.omega_h, config.engine.omega_c);

    if (with_pairs) out << "omega_h,omega_c,";
    out << "t1,t2,W_ad1,W_ad2,W_I,W_II,eta_O,eta_C,error\n";
    const SweepOptions options{config.backend, config.step, config.workers};
    for (const auto& [wh, wc] : pairs) {
        EngineParams engine = config.engine;
        engine.omega_h = wh;
        engine.omega_c = wc;
        const auto points = run_sweep(engine, config.t1_axis, config.t2_axis, options);
        for (const auto& pt : points) {
            if (with_pairs) out << format_number(wh) << ',' << format_number(wc) << ',';
            out << format_number(pt.t1) << ',' << format_number(pt.t2) << ',';
            if (pt.ledger) {
                const auto& l = *pt.ledger;
                out << format_number(l.W_ad1) << ',' << format_number(l.W_ad2) << ','
                    << format_number(l.W_I) << ',' << format_number(l.W_II) << ','
                    << format_number(l.eta_O) << ',' << format_number(l.eta_C) << ",\n";
            } else {
                out << ",,,,,," << csv_safe(pt.error) << '\n';
            }
        }
    }
}

void write_oracle(const RunConfig& config, std::ostream& out) {
    const auto hs = hot_stroke_at_limit_cycle(config, Backend::tcl2);
    const auto traj = hs.solution.trajectory(hs.cycle.hot_ground);

    const std::size_t last = traj.size() - 1;
    const std::size_t samples = config.oracle_samples;
    std::vector<std::size_t> index(samples);
    std::vector<double> times(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        index[i] = (i * last + (samples - 1) / 2) / (samples - 1);
        times[i] = traj.times[index[i]];
    }

    const auto bath = discretize_bath(config.engine.reservoir(Leg::hot), config.oracle_modes,
                                      config.oracle_omega_max, config.oracle_fock_cutoff);
    const auto exact = exact_evolve(hs.cycle.hot_ground, config.engine.omega_h, bath, times);

    out << "t,dES_tcl2,dES_exact,dEB_tcl2,dEB_exact,EI_tcl2,EI_exact,truncation_warning\n";
    for (std::size_t i = 0; i < samples; ++i) {
        const std::size_t k = index[i];
        out << format_number(times[i]) << ',' << format_number(system_energy_change(traj, k)) << ','
            << format_number(exact.dES[i]) << ',' << format_number(reservoir_energy_change(traj, k)) << ','
            << format_number(exact.dEB[i]) << ',' << format_number(interaction_energy(traj, k)) << ','
            << format_number(exact.EI[i]) << ',' << (exact.truncation_warning ? 1 : 0) << '\n';
    }
}

}  // namespace qotto
