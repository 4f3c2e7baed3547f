// Finite-time disentanglement ("sudden death") solver.
//
// Locates the first t with |z(t)| <= sqrt(a(t)*d(t)) by a forward scan at
// step 0.01/(Gamma*(2nbar+1)) followed by bisection.  At finite temperature
// every entangled X state crosses within the horizon 60/(Gamma*(2nbar+1));
// "never" can only occur at nbar == 0.

#pragma once

#include "esd/energy.hpp"
#include "esd/xstate.hpp"

namespace esd {

enum class DeathStatus { finite, never, already_separable };

struct DeathResult {
    DeathStatus status;
    /// First separability time; 0 for already_separable, +inf for never.
    double death_time;
    /// Elapsed damping omega^2 at the death time (NaN for never).
    double omega_sq_at_death;
    /// Energy dissipated by the death time (0 for already_separable, NaN for
    /// never).
    double delta_e_at_death;
    /// Final bisection bracket; the separability margin changes sign across
    /// it.  Degenerate (0,0) for already_separable.
    double bracket_low;
    double bracket_high;
};

/// Default absolute time tolerance, 1e-9 relaxation times.
double default_death_tol(const BathParams& bath);

DeathResult death_time(const XState& x0, const BathParams& bath,
                       const QubitEnergy& eq, double t_tol);

/// Energy dissipated by the death time.  Returns 0 for already-separable
/// input (death at t = 0); throws std::domain_error when the state never
/// disentangles within the horizon.
double energy_at_death(const XState& x0, const BathParams& bath,
                       const QubitEnergy& eq, double t_tol);

}  // namespace esd
