#include "esd/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "esd/lindblad.hpp"
#include "esd/random.hpp"

namespace esd {

namespace {

double off_pattern_weight(const DensityMatrix4& rho) {
    double w = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const bool on_pattern = i == j || (i == 1 && j == 2) || (i == 2 && j == 1);
            if (!on_pattern) w = std::max(w, std::abs(rho(i, j)));
        }
        w = std::max(w, std::abs(rho(i, i).imag()));
    }
    return std::max(w, std::abs(rho(1, 2).imag()));
}

}  // namespace

EquivalenceReport run_oracle_equivalence(const EquivalenceConfig& config) {
    std::mt19937_64 rng(config.seed);
    EquivalenceReport report;

    for (int i = 0; i < config.n_states; ++i) {
        const XState x0 = random_xstate(rng);
        const DensityMatrix4 rho0 = embed_xstate(x0);
        for (double nbar : config.nbars) {
            const BathParams bath(config.gamma_rate, nbar);
            const LindbladSpec spec = LindbladSpec::from_bath(bath);
            const double dt = LindbladSpec::default_dt(bath);
            for (double scaled_t : config.scaled_times) {
                const double t = scaled_t / bath.relaxation_rate();
                const DensityMatrix4 numeric = integrate(rho0, spec, t, dt);
                const DensityMatrix4 analytic =
                    embed_xstate(evolve_xstate(x0, bath, t));
                report.max_elementwise_dev =
                    std::max(report.max_elementwise_dev,
                             (numeric - analytic).cwiseAbs().maxCoeff());
                report.max_off_pattern =
                    std::max(report.max_off_pattern, off_pattern_weight(numeric));
                ++report.comparisons;
            }
        }
    }
    return report;
}

}  // namespace esd
