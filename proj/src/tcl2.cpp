#include "qotto/tcl2.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "qotto/quadrature.hpp"

namespace qotto {

void StrokeInput::validate() const {
    reservoir.validate();
    if (!(splitting > 0.0)) throw std::invalid_argument("stroke splitting must be positive");
    if (!(duration > 0.0)) throw std::invalid_argument("stroke duration must be positive");
    if (!(step >= 0.0)) throw std::invalid_argument("stroke step must be nonnegative");
    if (!(initial_ground >= 0.0 && initial_ground <= 1.0)) {
        throw std::invalid_argument("initial ground population must lie in [0, 1]");
    }
}

double default_step(double duration) { return std::min(0.01, duration / 2000.0); }

namespace {

struct Coefficients {
    double h{0.0};
    std::vector<double> a;
    std::vector<double> b;
    std::vector<double> noise_sin;        // D1(t) sin(w t)
    std::vector<double> dissipation_cos;  // D2(t) cos(w t)
};

Coefficients tcl2_coefficients(const ReservoirSpec& reservoir, double splitting, double duration,
                               double step) {
    reservoir.validate();
    if (!(splitting > 0.0)) throw std::invalid_argument("stroke splitting must be positive");
    if (step == 0.0) step = default_step(duration);
    const std::size_t n = interval_count(duration, step);
    const std::size_t points = n + 1;

    Coefficients c;
    c.h = duration / static_cast<double>(n);
    std::vector<double> a_rate(points), s_rate(points);
    c.noise_sin.resize(points);
    c.dissipation_cos.resize(points);
    for (std::size_t k = 0; k < points; ++k) {
        const double t = static_cast<double>(k) * c.h;
        const double d1 = noise_kernel(t, reservoir);
        const double d2 = dissipation_kernel(t, reservoir);
        const double cs = std::cos(splitting * t);
        const double sn = std::sin(splitting * t);
        a_rate[k] = -2.0 * d1 * cs;
        s_rate[k] = d2 * sn;
        c.noise_sin[k] = d1 * sn;
        c.dissipation_cos[k] = d2 * cs;
    }
    c.a = cumulative_simpson(a_rate, c.h);
    const auto s = cumulative_simpson(s_rate, c.h);
    c.b.resize(points);
    for (std::size_t k = 0; k < points; ++k) c.b[k] = 0.5 * c.a[k] - s[k];
    return c;
}

// I[k] = int_0^{t_k} b(s) exp(A_k - A(s)) ds, with the same weights cumulative_simpson
// would give b e^{-A}, but carried forward as a recurrence so that exp(-A) never
// overflows on strongly damped strokes.
std::vector<double> damped_source(const std::vector<double>& b, const std::vector<double>& cumA, double h) {
    const std::size_t n = b.size();
    std::vector<double> out(n, 0.0);
    auto decay = [&](std::size_t to, std::size_t from) { return std::exp(cumA[to] - cumA[from]); };
    if (n == 2) {
        out[1] = 0.5 * h * (b[0] * decay(1, 0) + b[1]);
        return out;
    }
    for (std::size_t k = 2; k < n; k += 2) {
        out[k] = decay(k, k - 2) * out[k - 2] +
                 h / 3.0 * (b[k - 2] * decay(k, k - 2) + 4.0 * b[k - 1] * decay(k, k - 1) + b[k]);
    }
    for (std::size_t k = 1; k < n; k += 2) {
        if (k + 1 < n) {
            out[k] = decay(k, k - 1) * out[k - 1] +
                     h / 12.0 * (5.0 * b[k - 1] * decay(k, k - 1) + 8.0 * b[k] - b[k + 1] * decay(k, k + 1));
        } else {
            out[k] = decay(k, k - 1) * out[k - 1] +
                     h / 12.0 * (-b[k - 2] * decay(k, k - 2) + 8.0 * b[k - 1] * decay(k, k - 1) + 5.0 * b[k]);
        }
    }
    return out;
}

}  // namespace

StrokeSolution solve_tcl2_stroke(const ReservoirSpec& reservoir, double splitting, double duration,
                                 double step) {
    if (!(duration > 0.0)) throw std::invalid_argument("stroke duration must be positive");
    auto c = tcl2_coefficients(reservoir, splitting, duration, step);
    const std::size_t points = c.a.size();

    StrokeSolution sol;
    sol.splitting = splitting;
    sol.times.resize(points);
    for (std::size_t k = 0; k < points; ++k) sol.times[k] = static_cast<double>(k) * c.h;
    sol.times.back() = duration;

    sol.cumA = cumulative_simpson(c.a, c.h);
    const auto source = damped_source(c.b, sol.cumA, c.h);

    sol.ground_slope.resize(points);
    sol.ground_offset.resize(points);
    sol.flux_slope.resize(points);
    sol.flux_offset.resize(points);
    for (std::size_t k = 0; k < points; ++k) {
        const double growth = std::exp(sol.cumA[k]);
        sol.ground_slope[k] = growth;
        sol.ground_offset[k] = -source[k];
        sol.flux_slope[k] = 2.0 * growth * c.noise_sin[k];
        sol.flux_offset[k] =
            (2.0 * sol.ground_offset[k] - 1.0) * c.noise_sin[k] + c.dissipation_cos[k];
    }
    sol.cum_flux_slope = cumulative_simpson(sol.flux_slope, c.h);
    sol.cum_flux_offset = cumulative_simpson(sol.flux_offset, c.h);
    sol.a_vals = std::move(c.a);
    sol.b_vals = std::move(c.b);
    return sol;
}

double coeff_a(double t, const StrokeInput& input) {
    input.validate();
    if (t < 0.0) throw std::domain_error("coeff_a: negative time");
    if (t == 0.0) return 0.0;
    const double step = input.step > 0.0 ? input.step : default_step(input.duration);
    return tcl2_coefficients(input.reservoir, input.splitting, t, step).a.back();
}

double coeff_b(double t, const StrokeInput& input) {
    input.validate();
    if (t < 0.0) throw std::domain_error("coeff_b: negative time");
    if (t == 0.0) return 0.0;
    const double step = input.step > 0.0 ? input.step : default_step(input.duration);
    return tcl2_coefficients(input.reservoir, input.splitting, t, step).b.back();
}

Trajectory evolve_diagonal(const StrokeInput& input) {
    input.validate();
    return solve_tcl2_stroke(input.reservoir, input.splitting, input.duration, input.step)
        .trajectory(input.initial_ground);
}

}  // namespace qotto
