#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "qotto/quadrature.hpp"

namespace {

std::vector<double> sample(double (*f)(double), std::size_t n, double h) {
    std::vector<double> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = f(double(k) * h);
    return v;
}

}  // namespace

TEST_CASE("cubics are integrated exactly at every node") {
    const double h = 0.125;
    auto f = [](double t) { return 1.0 - 2.0 * t + 0.5 * t * t * t; };
    auto F = [](double t) { return t - t * t + 0.125 * t * t * t * t; };
    for (std::size_t n : {3u, 4u, 9u, 10u}) {
        std::vector<double> v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = f(double(k) * h);
        const auto out = qotto::cumulative_simpson(v, h);
        REQUIRE(out.size() == n);
        CHECK(out[0] == 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            CAPTURE(k);
            // Odd nodes use a three-point rule: exact to quadratics, O(h^4) on cubics.
            const double tol = k % 2 ? 1e-3 : 1e-14;
            CHECK(out[k] == doctest::Approx(F(double(k) * h)).epsilon(tol));
        }
    }
}

TEST_CASE("quadratics are exact at odd nodes too") {
    const double h = 0.2;
    std::vector<double> v(7);
    for (std::size_t k = 0; k < v.size(); ++k) {
        const double t = double(k) * h;
        v[k] = 3.0 + t - 2.0 * t * t;
    }
    const auto out = qotto::cumulative_simpson(v, h);
    for (std::size_t k = 0; k < v.size(); ++k) {
        const double t = double(k) * h;
        CHECK(out[k] == doctest::Approx(3.0 * t + 0.5 * t * t - 2.0 / 3.0 * t * t * t).epsilon(1e-13));
    }
}

TEST_CASE("fourth-order convergence on a smooth integrand") {
    auto err = [](double h) {
        const std::size_t n = std::size_t(std::lround(4.0 / h)) + 1;
        const auto out = qotto::cumulative_simpson(sample([](double t) { return std::cos(3.0 * t); }, n, h), h);
        double worst = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            worst = std::max(worst, std::abs(out[k] - std::sin(3.0 * double(k) * h) / 3.0));
        }
        return worst;
    };
    const double coarse = err(0.04);
    const double fine = err(0.02);
    CHECK(coarse / fine > 7.0);  // at least third order locally, fourth globally
    CHECK(fine < 1e-6);
}

TEST_CASE("degenerate sizes") {
    const std::vector<double> one{2.0};
    CHECK(qotto::cumulative_simpson(one, 0.1) == std::vector<double>{0.0});
    const std::vector<double> two{1.0, 3.0};
    const auto out = qotto::cumulative_simpson(two, 0.5);
    CHECK(out[1] == doctest::Approx(1.0));
    CHECK_THROWS_AS(qotto::cumulative_simpson(std::vector<double>{}, 0.1), std::invalid_argument);
}
