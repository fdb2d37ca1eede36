#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "qotto/markov.hpp"
#include "qotto/tcl2.hpp"

using namespace qotto;

namespace {

constexpr ReservoirSpec kHot{5.0, 0.01, 0.4};

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 61>;

// a(t) and b(t) by adaptive Gauss-Kronrod on the closed-form kernels.
double reference_a(double t, const ReservoirSpec& s, double w) {
    return -2.0 * Kronrod::integrate([&](double x) { return noise_kernel(x, s) * std::cos(w * x); }, 0.0, t, 15,
                                     1e-14);
}
double reference_b(double t, const ReservoirSpec& s, double w) {
    const double sine = Kronrod::integrate([&](double x) { return dissipation_kernel(x, s) * std::sin(w * x); },
                                           0.0, t, 15, 1e-14);
    return 0.5 * reference_a(t, s, w) - sine;
}

}  // namespace

TEST_CASE("default step") {
    CHECK(default_step(5.0) == doctest::Approx(0.0025));
    CHECK(default_step(60.0) == 0.01);
    CHECK(interval_count(5.0, 0.0025) == 2000);
    CHECK(interval_count(1.0, 0.3) == 4);
}

TEST_CASE("coefficients vanish at t = 0 and without coupling") {
    StrokeInput in{kHot, 1.0, 1.0, 5.0, 0.0};
    CHECK(coeff_a(0.0, in) == 0.0);
    CHECK(coeff_b(0.0, in) == 0.0);
    in.reservoir.coupling = 0.0;
    for (double t : {0.3, 2.0, 5.0}) {
        CHECK(coeff_a(t, in) == 0.0);
        CHECK(coeff_b(t, in) == 0.0);
    }
}

TEST_CASE("coefficients against an independent quadrature") {
    const StrokeInput in{kHot, 1.0, 1.0, 5.0, 0.0};
    for (double t : {0.5, 2.0, 5.0}) {
        CAPTURE(t);
        const double ra = reference_a(t, kHot, 1.0);
        const double rb = reference_b(t, kHot, 1.0);
        CHECK(std::abs(coeff_a(t, in) - ra) <= 1e-8 * std::abs(ra));
        CHECK(std::abs(coeff_b(t, in) - rb) <= 1e-8 * std::abs(rb));
    }
}

TEST_CASE("coefficients agree with themselves at half the step") {
    StrokeInput in{kHot, 1.0, 1.0, 5.0, 0.0};
    const double a = coeff_a(5.0, in), b = coeff_b(5.0, in);
    in.step = default_step(5.0) / 2.0;
    CHECK(std::abs(coeff_a(5.0, in) - a) <= 1e-8 * std::abs(a));
    CHECK(std::abs(coeff_b(5.0, in) - b) <= 1e-8 * std::abs(b));
}

TEST_CASE("long-time coefficients approach the golden-rule rates") {
    // a(inf) = -2 pi J coth(w/2T) = -Gamma, b(inf) = -Gamma rho_inf.
    const StrokeInput in{kHot, 1.0, 1.0, 200.0, 0.01};
    const double rate = markov_rate(kHot, 1.0);
    CHECK(coeff_a(200.0, in) == doctest::Approx(-rate).epsilon(2e-3));
    CHECK(coeff_b(200.0, in) == doctest::Approx(-rate * markov_stationary(1.0, 5.0)).epsilon(2e-3));
}

TEST_CASE("zero coupling leaves the populations frozen") {
    for (double p : {0.0, 0.3, 1.0}) {
        const auto traj = evolve_diagonal({{5.0, 0.0, 0.4}, 1.0, p, 5.0, 0.0});
        for (std::size_t k = 0; k < traj.size(); ++k) {
            CHECK(traj.rho00[k] == p);
            CHECK(traj.flux[k] == 0.0);
        }
    }
}

TEST_CASE("populations sum to one and follow the rate equation") {
    const auto traj = evolve_diagonal({kHot, 1.0, 0.5447, 5.0, 0.0});
    REQUIRE(traj.size() == 2001);
    const double h = traj.times[1] - traj.times[0];
    for (std::size_t k = 1; k + 1 < traj.size(); ++k) {
        CHECK(traj.rho00[k] + traj.rho11(k) == 1.0);
        const double derivative = (traj.rho00[k + 1] - traj.rho00[k - 1]) / (2.0 * h);
        const double rate = traj.a_vals[k] * traj.rho00[k] - traj.b_vals[k];
        CHECK(std::abs(derivative - rate) < 1e-8);
    }
}

TEST_CASE("trajectory is affine in the initial population") {
    const auto sol = solve_tcl2_stroke(kHot, 1.0, 5.0);
    const auto t0 = sol.trajectory(0.0), t1 = sol.trajectory(1.0), tp = sol.trajectory(0.3);
    for (std::size_t k = 0; k < sol.size(); k += 97) {
        CHECK(tp.rho00[k] == doctest::Approx(0.3 * t1.rho00[k] + 0.7 * t0.rho00[k]).epsilon(1e-14));
        CHECK(tp.cum_flux[k] == doctest::Approx(0.3 * t1.cum_flux[k] + 0.7 * t0.cum_flux[k]).epsilon(1e-12));
    }
}

TEST_CASE("grid convergence at the reference point") {
    const double h = default_step(5.0);
    const auto coarse = solve_tcl2_stroke(kHot, 1.0, 5.0, h);
    const auto fine = solve_tcl2_stroke(kHot, 1.0, 5.0, h / 2.0);
    for (double p : {0.0, 0.5447, 1.0}) {
        CHECK(std::abs(coarse.final_ground(p) - fine.final_ground(p)) < 1e-7);
    }
}

TEST_CASE("weak coupling relaxes to the Markov stationary value") {
    const ReservoirSpec cold{1.0, 0.01, 2.0};
    const auto sol = solve_tcl2_stroke(cold, 1.0, 400.0, 0.02);
    const double stationary = markov_stationary(1.0, 1.0);
    CHECK(std::abs(sol.final_ground(1.0) - stationary) < 2e-2);
    CHECK(std::abs(sol.final_ground(0.0) - stationary) < 2e-2);
}

TEST_CASE("hot stroke transiently overheats the system") {
    // Started near the limit-cycle population, rho11 rises above its end value.
    const auto traj = evolve_diagonal({kHot, 1.0, 0.5447, 5.0, 0.0});
    double peak = 0.0;
    for (std::size_t k = 0; k < traj.size(); ++k) peak = std::max(peak, traj.rho11(k));
    CHECK(peak > traj.rho11(traj.size() - 1));
    CHECK(peak > 1.0 - markov_stationary(1.0, 5.0));
}

TEST_CASE("strongly damped strokes stay finite") {
    // Gamma t ~ 2000: the naive exp(-A) factor would overflow.
    const auto sol = solve_tcl2_stroke({20.0, 0.5, 10.0}, 1.0, 10.0, 0.005);
    CHECK_NOTHROW(sol.check_positivity());
    CHECK(std::isfinite(sol.final_ground(1.0)));
    CHECK(sol.final_ground(1.0) == doctest::Approx(sol.final_ground(0.0)).epsilon(1e-9));
}

TEST_CASE("positivity violations are reported, not clamped") {
    const auto sol = solve_tcl2_stroke({0.01, 0.5, 2.0}, 1.0, 10.0, 0.005);
    CHECK_THROWS_AS(sol.check_positivity(), PositivityViolation);
    try {
        sol.check_positivity();
    } catch (const PositivityViolation& e) {
        CHECK(e.population() > 1.0 + kPositivityTolerance);
        CHECK(e.time() > 0.0);
        CHECK(e.time() < 10.0);
    }
    CHECK_THROWS_AS(evolve_diagonal({{0.01, 0.5, 2.0}, 1.0, 1.0, 10.0, 0.005}), PositivityViolation);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(evolve_diagonal({kHot, 1.0, 1.5, 5.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(evolve_diagonal({kHot, 0.0, 1.0, 5.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(evolve_diagonal({kHot, 1.0, 1.0, -1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(evolve_diagonal({kHot, 1.0, 1.0, 5.0, -0.1}), std::invalid_argument);
    CHECK_THROWS_AS(coeff_a(-1.0, {kHot, 1.0, 1.0, 5.0, 0.0}), std::domain_error);
}
