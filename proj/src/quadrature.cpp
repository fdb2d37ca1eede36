#include "qotto/quadrature.hpp"

#include <stdexcept>

namespace qotto {

std::vector<double> cumulative_simpson(std::span<const double> f, double h) {
    const std::size_t n = f.size();
    if (n == 0) throw std::invalid_argument("cumulative_simpson: empty input");
    std::vector<double> out(n, 0.0);
    if (n == 2) {
        out[1] = 0.5 * h * (f[0] + f[1]);
        return out;
    }
    for (std::size_t k = 2; k < n; k += 2) {
        out[k] = out[k - 2] + h / 3.0 * (f[k - 2] + 4.0 * f[k - 1] + f[k]);
    }
    for (std::size_t k = 1; k < n; k += 2) {
        if (k + 1 < n) {
            out[k] = out[k - 1] + h / 12.0 * (5.0 * f[k - 1] + 8.0 * f[k] - f[k + 1]);
        } else {
            out[k] = out[k - 1] + h / 12.0 * (-f[k - 2] + 8.0 * f[k - 1] + 5.0 * f[k]);
        }
    }
    return out;
}

}  // namespace qotto
