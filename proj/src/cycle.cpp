#include "qotto/cycle.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "qotto/markov.hpp"
#include "qotto/tcl2.hpp"

namespace qotto {

namespace {

std::string degenerate_message(double p0) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "no unique limit cycle: contraction factor p0 = %.15g", p0);
    return buf;
}

}  // namespace

DegenerateCycle::DegenerateCycle(double contraction)
    : std::runtime_error(degenerate_message(contraction)), contraction_(contraction) {}

StrokeSolution solve_stroke(const EngineParams& engine, Leg leg, Backend backend, double step) {
    const auto reservoir = engine.reservoir(leg);
    const double splitting = engine.splitting(leg);
    const double duration = engine.duration(leg);
    return backend == Backend::tcl2 ? solve_tcl2_stroke(reservoir, splitting, duration, step)
                                    : solve_markov_stroke(reservoir, splitting, duration, step);
}

StrokeMap stroke_map(const StrokeSolution& solution) {
    solution.check_positivity();
    return {solution.final_ground(1.0), solution.final_ground(0.0)};
}

StrokeMap stroke_map(const EngineParams& engine, Leg leg, Backend backend, double step) {
    engine.validate();
    return stroke_map(solve_stroke(engine, leg, backend, step));
}

LimitCycle limit_cycle(const StrokeMap& hot, const StrokeMap& cold) {
    const double p0 = (cold.from_ground - cold.from_excited) * (hot.from_ground - hot.from_excited);
    if (!(std::abs(p0) < kDegenerateContraction)) throw DegenerateCycle(p0);

    const double p_hot = cold.from_ground * hot.from_excited + cold.from_excited * (1.0 - hot.from_excited);
    const double p_cold = hot.from_ground * cold.from_excited + hot.from_excited * (1.0 - cold.from_excited);

    LimitCycle lc;
    lc.hot_ground = p_hot / (1.0 - p0);
    lc.cold_ground = p_cold / (1.0 - p0);
    lc.contraction = p0;
    lc.settle_cycles = p0 == 0.0 ? 1
                                 : static_cast<std::size_t>(std::ceil(std::log(1e-12) / std::log(std::abs(p0))));
    return lc;
}

std::vector<std::pair<double, double>> iterate_cycle(const StrokeMap& hot, const StrokeMap& cold,
                                                     double start, std::size_t n) {
    std::vector<std::pair<double, double>> orbit;
    orbit.reserve(n);
    double p = start;
    for (std::size_t k = 0; k < n; ++k) {
        const double pc = hot.apply(p);
        orbit.emplace_back(p, pc);
        p = cold.apply(pc);
    }
    return orbit;
}

}  // namespace qotto
