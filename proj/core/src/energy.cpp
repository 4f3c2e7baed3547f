#include "esd/energy.hpp"

#include <cmath>
#include <string>

namespace esd {

namespace {
constexpr double kEnergyBlindTol = 1e-12;
constexpr double kClosedFormTol = 1e-10;
}  // namespace

QubitEnergy::QubitEnergy(double e_a_) : e_a(e_a_) {
    if (!(e_a > 0.0) || !std::isfinite(e_a)) {
        throw std::domain_error("QubitEnergy: e_a must be > 0");
    }
}

double mean_energy_a(const XState& x, const QubitEnergy& eq) {
    return 0.5 * eq.e_a * (x.a() + x.b() - x.c() - x.d());
}

EnergyReport energy_report(const XState& x0, const BathParams& bath, double t,
                           const QubitEnergy& eq) {
    const XState xt = evolve_xstate(x0, bath, t);
    const NoiseFactors nf = noise_factors(bath.nbar);
    const double omega_sq = decay_pair(bath, t).omega_sq;

    EnergyReport r;
    r.e_initial = mean_energy_a(x0, eq);
    r.e_final = mean_energy_a(xt, eq);
    r.delta_e = r.e_initial - r.e_final;
    r.alpha = x0.a() + x0.b() - x0.c() - x0.d();
    r.beta = 2.0 * (x0.c() + x0.d() - nf.n1 - nf.n3);

    const double closed_form = 0.5 * eq.e_a * (r.alpha + r.beta * omega_sq);
    if (std::abs(closed_form - r.e_final) > kClosedFormTol) {
        throw std::logic_error(
            "energy_report: closed-form energy disagrees with direct value by " +
            std::to_string(std::abs(closed_form - r.e_final)));
    }

    if (std::abs(0.5 * r.beta) > kEnergyBlindTol) {
        r.omega_sq_reconstructed = omega_sq_from_delta_e(r.delta_e, x0, bath.nbar, eq);
    }
    return r;
}

double omega_sq_from_delta_e(double delta_e, const XState& x0, double nbar,
                             const QubitEnergy& eq) {
    const NoiseFactors nf = noise_factors(nbar);
    const double denom = x0.c() + x0.d() - nf.n1 - nf.n3;
    if (std::abs(denom) <= kEnergyBlindTol) {
        throw EnergyBlindError(
            "omega_sq_from_delta_e: energy-blind state, qubit-A inversion "
            "already at steady-state value");
    }
    return -delta_e / (eq.e_a * denom);
}

double bell_bound(double nbar, const QubitEnergy& eq) {
    if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
        throw std::domain_error("bell_bound: nbar must be >= 0");
    }
    const double m = 2.0 * nbar + 1.0;
    return eq.e_a * m / (2.0 * (m * m + 2.0 * nbar * (nbar + 1.0)));
}

double general_bound(const XState& x0, double nbar, const QubitEnergy& eq,
                     BoundVariant variant) {
    const NoiseFactors nf = noise_factors(nbar);
    const double abs_z = std::abs(x0.z());
    const double denom = abs_z + (x0.b() + x0.c()) * nf.n3;
    if (!(denom > 0.0)) {
        throw BoundUndefinedError(
            "general_bound: |z| + (b+c)*N3 == 0; state is already separable "
            "or the bath has no thermal quanta to mix populations");
    }
    const double inversion_gap =
        variant == BoundVariant::corrected
            ? x0.c() + x0.d() - nf.n1 - nf.n3
            : x0.c() + x0.d() - nf.n1 - nf.n2;
    return std::abs(x0.z() * eq.e_a * inversion_gap) / denom;
}

}  // namespace esd
