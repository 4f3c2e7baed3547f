// Seeded equivalence suite: closed-form propagator vs master-equation oracle.

#pragma once

#include <cstdint>
#include <vector>

#include "esd/xstate.hpp"

namespace esd {

struct EquivalenceConfig {
    std::uint64_t seed = 42;
    int n_states = 200;
    double gamma_rate = 1.0;
    std::vector<double> nbars = {0.0, 0.5, 1.0, 3.0};
    /// Comparison times in units of 1/(Gamma*(2nbar+1)).
    std::vector<double> scaled_times = {0.1, 0.5, 1.0, 3.0};
};

struct EquivalenceReport {
    /// max |embed(evolve_xstate(...)) - integrate(...)| over all entries.
    double max_elementwise_dev = 0.0;
    /// max off-X-pattern magnitude in any integrated matrix.
    double max_off_pattern = 0.0;
    long comparisons = 0;

    bool passed(double dev_tol = 1e-8, double pattern_tol = 1e-10) const {
        return max_elementwise_dev < dev_tol && max_off_pattern < pattern_tol;
    }
};

EquivalenceReport run_oracle_equivalence(const EquivalenceConfig& config);

}  // namespace esd
