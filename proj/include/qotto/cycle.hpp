// cycle.hpp — limit cycle of the repeated Otto protocol
//
// Between strokes the state is projected onto its diagonal and the reservoir is
// reset to its Gibbs state, so the stroboscopic dynamics of the ground-state
// probability P is the affine map
//   P_c = P_h r0_h + (1 - P_h) r1_h,     P_h' = P_c r0_c + (1 - P_c) r1_c,
// whose fixed point is P = p / (1 - p0) with p0 = (r0_c - r1_c)(r0_h - r1_h).

#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qotto/engine.hpp"
#include "qotto/stroke.hpp"

namespace qotto {

// Final ground populations of one stroke started from |0> and from |1>.
struct StrokeMap {
    double from_ground{1.0};   // r0
    double from_excited{0.0};  // r1

    double apply(double p) const { return p * from_ground + (1.0 - p) * from_excited; }
};

struct LimitCycle {
    double hot_ground{0.0};   // P_h, ground population entering the hot stroke
    double cold_ground{0.0};  // P_c, ground population entering the cold stroke
    double contraction{0.0};  // p0
    // Cycles after which the distance to the fixed point has shrunk below 1e-12.
    std::size_t settle_cycles{0};
};

class DegenerateCycle : public std::runtime_error {
public:
    explicit DegenerateCycle(double contraction);
    double contraction() const noexcept { return contraction_; }

private:
    double contraction_;
};

// |p0| at or above this has no unique limit cycle.
inline constexpr double kDegenerateContraction = 1.0 - 1e-12;

// Solve one leg of the engine with the chosen backend. step = 0 uses default_step.
StrokeSolution solve_stroke(const EngineParams& engine, Leg leg, Backend backend, double step = 0.0);

// Throws PositivityViolation if either branch leaves [0, 1].
StrokeMap stroke_map(const StrokeSolution& solution);
StrokeMap stroke_map(const EngineParams& engine, Leg leg, Backend backend, double step = 0.0);

// Throws DegenerateCycle if |p0| >= 1 - 1e-12.
LimitCycle limit_cycle(const StrokeMap& hot, const StrokeMap& cold);

// Explicit orbit (P_h_k, P_c_k), k = 0..n-1, starting from P_h_0 = start.
std::vector<std::pair<double, double>> iterate_cycle(const StrokeMap& hot, const StrokeMap& cold,
                                                     double start, std::size_t n);

}  // namespace qotto
