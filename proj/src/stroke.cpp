#include "qotto/stroke.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace qotto {

namespace {

std::string describe(double time, double population) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "population %.12g at t = %.12g leaves [0, 1]", population, time);
    return buf;
}

bool outside(double x) {
    return !(x >= -kPositivityTolerance && x <= 1.0 + kPositivityTolerance);
}

}  // namespace

PositivityViolation::PositivityViolation(double time, double population)
    : std::runtime_error(describe(time, population)), time_(time), population_(population) {}

void StrokeSolution::check_positivity() const {
    for (std::size_t k = 0; k < size(); ++k) {
        const double from_ground = ground(k, 1.0);
        const double from_excited = ground(k, 0.0);
        if (outside(from_ground)) throw PositivityViolation(times[k], from_ground);
        if (outside(from_excited)) throw PositivityViolation(times[k], from_excited);
    }
}

Trajectory StrokeSolution::trajectory(double p) const {
    Trajectory traj;
    traj.splitting = splitting;
    traj.times = times;
    traj.cumA = cumA;
    traj.a_vals = a_vals;
    traj.b_vals = b_vals;
    const std::size_t n = size();
    traj.rho00.resize(n);
    traj.flux.resize(n);
    traj.cum_flux.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        traj.rho00[k] = ground(k, p);
        if (outside(traj.rho00[k])) throw PositivityViolation(times[k], traj.rho00[k]);
        traj.flux[k] = p * flux_slope[k] + flux_offset[k];
        traj.cum_flux[k] = p * cum_flux_slope[k] + cum_flux_offset[k];
    }
    traj.rho00[0] = p;
    return traj;
}

std::size_t interval_count(double duration, double step) {
    if (!(duration > 0.0) || !(step > 0.0)) {
        throw std::invalid_argument("interval_count: duration and step must be positive");
    }
    const double n = std::ceil(duration / step - 1e-9);
    return static_cast<std::size_t>(std::max(1.0, n));
}

}  // namespace qotto
