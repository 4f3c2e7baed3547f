// Seeded random X states for verification suites and property tests.

#pragma once

#include <random>

#include "esd/xstate.hpp"

namespace esd {

/// Uniformly distributed valid X state: populations flat on the probability
/// simplex, coherence uniform on [-sqrt(b*c), sqrt(b*c)].
XState random_xstate(std::mt19937_64& rng);

/// Rejection-sampled random X state with strictly positive concurrence.
XState random_entangled_xstate(std::mt19937_64& rng);

}  // namespace esd
