// markov.hpp — Born-Markov baseline: exponential relaxation of the populations
// at rate 2 pi J(w) (1 + 2 n(w)) toward (1 + n) / (1 + 2 n).

#pragma once

#include "qotto/engine.hpp"
#include "qotto/kernels.hpp"
#include "qotto/stroke.hpp"

namespace qotto {

struct MarkovStroke {
    ReservoirSpec reservoir;
    double splitting{1.0};
    double initial_ground{1.0};
    double duration{1.0};
};

// Bose-Einstein occupation 1 / (exp(w / T) - 1). Throws std::domain_error unless w, T > 0.
double bose_n(double omega, double temperature);

double markov_rate(const ReservoirSpec& reservoir, double splitting);

// Long-time ground population (1 + n) / (1 + 2 n).
double markov_stationary(double splitting, double temperature);

double markov_rho00(double t, const MarkovStroke& stroke);

// Closed-form stroke on the same uniform grid the TCL2 solver would use. a and b are
// the t -> infinity limits of the TCL2 coefficients; the reservoir-energy correction
// flux vanishes identically.
StrokeSolution solve_markov_stroke(const ReservoirSpec& reservoir, double splitting,
                                   double duration, double step = 0.0);

// True iff omega_c / omega_h > T_c / T_h (equivalently eta_O < eta_C). Equality is false.
bool positive_work_condition(const EngineParams& params);

}  // namespace qotto
