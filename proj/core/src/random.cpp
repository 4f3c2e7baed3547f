#include "esd/random.hpp"

#include <cmath>

namespace esd {

XState random_xstate(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    // Flat Dirichlet via normalized exponentials.
    double e[4];
    double sum = 0.0;
    for (double& v : e) {
        v = -std::log(1.0 - unit(rng));
        sum += v;
    }
    const double a = e[0] / sum;
    const double b = e[1] / sum;
    const double c = e[2] / sum;
    const double d = 1.0 - a - b - c;
    const double z_max = std::sqrt(std::max(0.0, b * c));
    const double z = z_max * (2.0 * unit(rng) - 1.0);
    return XState(a, b, c, d, z);
}

XState random_entangled_xstate(std::mt19937_64& rng) {
    for (;;) {
        const XState x = random_xstate(rng);
        if (concurrence_x(x) > 0.0) return x;
    }
}

}  // namespace esd
