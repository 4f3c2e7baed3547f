// Brute-force master-equation oracle for the full 4x4 density matrix.
//
// Integrates d(rho)/dt = sum_k r_k (L_k rho L_k^+ - {L_k^+ L_k, rho}/2) over
// the four thermal jump channels (lowering/raising on each qubit) with a
// fixed-step classical RK4 and a mandatory step-halving verification.  The
// free-Hamiltonian commutator is dropped: evolution is computed in the
// interaction picture, where the X coherence carries no oscillatory phase.
// Everything here is deliberately independent of the closed-form propagator
// in xstate.hpp so the two paths can check each other.

#pragma once

#include <Eigen/Dense>
#include <stdexcept>

#include "esd/xstate.hpp"

namespace esd {

/// Full two-qubit density matrix in the |++>,|+->,|-+>,|--> basis.
using DensityMatrix4 = Eigen::Matrix4cd;

class StructureError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class IntegrationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Rates of the four thermal jump channels.  Lowering channels run at
/// Gamma*(nbar+1), raising channels at Gamma*nbar; A-channels and B-channels
/// act on disjoint tensor factors.
struct LindbladSpec {
    double lower_a;
    double raise_a;
    double lower_b;
    double raise_b;

    LindbladSpec(double lower_a_, double raise_a_, double lower_b_,
                 double raise_b_);

    static LindbladSpec from_bath(const BathParams& bath);

    /// Step size resolving the fastest channel by three orders of magnitude.
    static double default_dt(const BathParams& bath) {
        return 1e-3 / bath.relaxation_rate();
    }
};

/// Check the density-matrix contract: Hermitian within herm_tol, unit trace
/// within trace_tol, eigenvalues >= eig_floor.
bool is_valid_density(const DensityMatrix4& rho, double herm_tol = 1e-12,
                      double trace_tol = 1e-12, double eig_floor = -1e-10);

/// Place an X state into its 4x4 matrix: diagonal (a,b,c,d), entries (1,2)
/// and (2,1) equal to z, all else zero.
DensityMatrix4 embed_xstate(const XState& x);

/// Recover the five X parameters.  Throws StructureError if any off-pattern
/// entry (or the imaginary part of the coherence) exceeds 1e-10: the
/// dynamics must never leave the X family for X initial data.
XState extract_xstate(const DensityMatrix4& rho);

/// Right-hand side of the master equation (no Hamiltonian commutator).
DensityMatrix4 lindblad_rhs(const DensityMatrix4& rho, const LindbladSpec& spec);

/// Fixed-step RK4 from 0 to t with step <= dt.  The result is re-run at half
/// the step and must agree elementwise within 1e-9; on disagreement the step
/// is halved again (at most twice) before IntegrationError is thrown.  Also
/// throws if the trace drifts by more than 1e-9.
DensityMatrix4 integrate(const DensityMatrix4& rho0, const LindbladSpec& spec,
                         double t, double dt);

/// General two-qubit concurrence: C = max{0, l1 - l2 - l3 - l4} with l_i the
/// decreasing square roots of the eigenvalues of
/// rho * (sy (x) sy) * conj(rho) * (sy (x) sy).
double wootters_concurrence(const DensityMatrix4& rho);

}  // namespace esd
