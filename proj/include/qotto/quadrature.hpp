// quadrature.hpp — cumulative integration on a uniform grid

#pragma once

#include <span>
#include <vector>

namespace qotto {

// Running integral F[k] = int_0^{t_k} f on a uniform grid with spacing h.
// Even k: composite Simpson. Odd k: the preceding even value plus a three-point
// quadratic rule over the last interval. F[0] = 0. Requires f.size() >= 1.
std::vector<double> cumulative_simpson(std::span<const double> f, double h);

}  // namespace qotto
