// stroke.hpp — per-stroke time series shared by the TCL2 and Markov backends

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qotto {

// Populations may leave [0, 1] by at most this much before the stroke is rejected.
inline constexpr double kPositivityTolerance = 1e-9;

// The second-order map stopped being positive: a population left [-eps, 1 + eps].
class PositivityViolation : public std::runtime_error {
public:
    PositivityViolation(double time, double population);
    double time() const noexcept { return time_; }
    double population() const noexcept { return population_; }

private:
    double time_;
    double population_;
};

// Diagonal dynamics of one isochoric stroke from a fixed initial ground population.
// rho00 obeys d(rho00)/dt = a(t) rho00 - b(t).
struct Trajectory {
    double splitting{0.0};
    std::vector<double> times;
    std::vector<double> rho00;
    std::vector<double> cumA;   // int_0^t a
    std::vector<double> a_vals;
    std::vector<double> b_vals;
    // Reservoir-energy correction rate (2 rho00 - 1) D1 sin(w t) + D2 cos(w t) and its
    // running integral. Identically zero for the Markov backend.
    std::vector<double> flux;
    std::vector<double> cum_flux;

    std::size_t size() const noexcept { return times.size(); }
    double rho11(std::size_t k) const { return 1.0 - rho00[k]; }
};

// A solved stroke. Everything time dependent is affine in the initial ground
// population p: x(t) = p * slope(t) + offset(t), so one solve serves the |0>, |1>
// and limit-cycle initial states alike.
struct StrokeSolution {
    double splitting{0.0};
    std::vector<double> times;
    std::vector<double> a_vals;
    std::vector<double> b_vals;
    std::vector<double> cumA;
    std::vector<double> ground_slope;
    std::vector<double> ground_offset;
    std::vector<double> flux_slope;
    std::vector<double> flux_offset;
    std::vector<double> cum_flux_slope;
    std::vector<double> cum_flux_offset;

    std::size_t size() const noexcept { return times.size(); }
    double duration() const { return times.back(); }

    double ground(std::size_t k, double p) const { return p * ground_slope[k] + ground_offset[k]; }
    double final_ground(double p) const { return ground(size() - 1, p); }
    double final_flux_integral(double p) const {
        return p * cum_flux_slope.back() + cum_flux_offset.back();
    }

    // Throws PositivityViolation if the |0> or |1> branch leaves [-eps, 1 + eps]. By
    // linearity every p in [0, 1] then stays inside as well.
    void check_positivity() const;

    // Materialise the trajectory for initial ground population p; throws PositivityViolation.
    Trajectory trajectory(double p) const;
};

// Number of uniform intervals covering [0, duration] with spacing at most `step`.
std::size_t interval_count(double duration, double step);

}  // namespace qotto
