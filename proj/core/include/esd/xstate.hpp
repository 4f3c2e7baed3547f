// X-form two-qubit states under independent thermal amplitude damping.
//
// The "X" (standard-form) density matrix is parameterized by four real
// populations a, b, c, d on |++>, |+->, |-+>, |--> and one real coherence z
// between |+-> and |-+>.  This family is closed under local thermal
// amplitude damping, so the full open-system evolution reduces to five
// closed-form component maps driven by the survival factor
// gamma(t) = exp(-Gamma*(2*nbar+1)*t/2) and the thermal weights N1, N2, N3.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace esd {

/// Damping rate and mean thermal occupation shared by both local baths.
struct BathParams {
    double gamma_rate;  ///< Gamma > 0, inverse time
    double nbar;        ///< mean thermal quanta, >= 0

    BathParams(double gamma_rate_, double nbar_);

    /// Total relaxation rate Gamma*(2*nbar+1); sets the natural time unit.
    double relaxation_rate() const { return gamma_rate * (2.0 * nbar + 1.0); }
};

/// Thermal weights N1 = (nbar+1)^2/(2nbar+1)^2, N2 = nbar^2/(2nbar+1)^2,
/// N3 = nbar*(nbar+1)/(2nbar+1)^2.  Satisfy n1 + n2 + 2*n3 = 1 and
/// n3 = sqrt(n1*n2).
struct NoiseFactors {
    double n1;
    double n2;
    double n3;
};

/// Amplitude survival factor gamma(t) and its complement omega^2 = 1 - gamma^2.
struct DecayPair {
    double gamma;     ///< in (0, 1], equals 1 at t = 0
    double omega_sq;  ///< in [0, 1)
};

/// Standard-form (X) two-qubit state.  Immutable value type; construction
/// validates positivity, unit trace and |z| <= sqrt(b*c) within `tol`.
/// Out-of-tolerance inputs are rejected (std::domain_error), never
/// renormalized.
class XState {
  public:
    XState(double a, double b, double c, double d, double z,
           double tol = 1e-12);

    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    double d() const { return d_; }
    double z() const { return z_; }

  private:
    double a_, b_, c_, d_, z_;
};

NoiseFactors noise_factors(double nbar);

DecayPair decay_pair(const BathParams& bath, double t);

/// Propagate an X state for time t >= 0 under two identical local thermal
/// amplitude-damping baths.  Trace-preserving and positivity-preserving;
/// composes as a semigroup: evolve(evolve(x, t1), t2) == evolve(x, t1 + t2).
XState evolve_xstate(const XState& x0, const BathParams& bath, double t);

/// Concurrence of an X state: 2*max{0, |z| - sqrt(a*d)}.  0 = separable,
/// 1 = maximally entangled.
double concurrence_x(const XState& x);

/// True iff |z| <= sqrt(a*d), i.e. concurrence_x(x) == 0.
bool is_fully_disentangled(const XState& x);

/// Werner state: p * (Bell-minus projector) + (1-p)/4 * identity, p in [0,1].
XState werner_state(double p);

/// Named preset states: "bell-plus", "bell-minus", "ye4-third", "werner(p)"
/// with p a decimal literal.  Unknown names throw std::domain_error.
XState preset_state(std::string_view name);

}  // namespace esd
