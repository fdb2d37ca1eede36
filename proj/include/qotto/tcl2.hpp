// tcl2.hpp — exact solution of the second-order TCL master equation for the
// diagonal populations of a two-level system attached to one Ohmic reservoir.
//
// With factorized initial state |m><m| (x) Gibbs, the ground population obeys
//   rho00(t) = e^{A(t)} (rho00(0) - int_0^t b(s) e^{-A(s)} ds),   A(t) = int_0^t a,
//   a(t) = -2 int_0^t D1(s) cos(w s) ds,
//   b(t) = a(t)/2 - int_0^t D2(s) sin(w s) ds.
// All integrals are evaluated with cumulative Simpson on one uniform grid.

#pragma once

#include <cstddef>

#include "qotto/kernels.hpp"
#include "qotto/stroke.hpp"

namespace qotto {

struct StrokeInput {
    ReservoirSpec reservoir;
    double splitting{1.0};       // omega_mu
    double initial_ground{1.0};  // rho00(0)
    double duration{1.0};        // t_end
    double step{0.0};            // grid spacing; 0 selects default_step(duration)

    void validate() const;
};

// min(0.01, duration / 2000)
double default_step(double duration);

// Solve the stroke for all initial populations at once (see StrokeSolution).
StrokeSolution solve_tcl2_stroke(const ReservoirSpec& reservoir, double splitting, double duration,
                                 double step = 0.0);

// a(t) and b(t), integrated over [0, t] with the spacing the stroke would use.
double coeff_a(double t, const StrokeInput& input);
double coeff_b(double t, const StrokeInput& input);

// Throws PositivityViolation if rho00 leaves [-1e-9, 1 + 1e-9].
Trajectory evolve_diagonal(const StrokeInput& input);

}  // namespace qotto
