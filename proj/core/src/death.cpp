#include "esd/death.hpp"

#include <cmath>
#include <limits>

namespace esd {

namespace {

constexpr double kScanStepScaled = 0.01;  // in units of 1/(Gamma*(2nbar+1))
constexpr double kHorizonScaled = 60.0;

// Separability margin |z(t)| - sqrt(a(t)*d(t)); death is the first sign
// change from positive to non-positive.
double margin_at(const XState& x0, const BathParams& bath, double t) {
    const XState xt = evolve_xstate(x0, bath, t);
    return std::abs(xt.z()) - std::sqrt(std::max(0.0, xt.a() * xt.d()));
}

}  // namespace

double default_death_tol(const BathParams& bath) {
    return 1e-9 / bath.relaxation_rate();
}

DeathResult death_time(const XState& x0, const BathParams& bath,
                       const QubitEnergy& eq, double t_tol) {
    if (!(t_tol > 0.0) || !std::isfinite(t_tol)) {
        throw std::domain_error("death_time: t_tol must be > 0");
    }

    if (margin_at(x0, bath, 0.0) <= 0.0) {
        return DeathResult{DeathStatus::already_separable, 0.0, 0.0, 0.0, 0.0, 0.0};
    }

    const double rate = bath.relaxation_rate();
    const double step = kScanStepScaled / rate;
    const double horizon = kHorizonScaled / rate;

    // Forward scan for the first non-positive margin.
    double lo = 0.0;
    double hi = 0.0;
    bool bracketed = false;
    const long n_scan = static_cast<long>(std::ceil(kHorizonScaled / kScanStepScaled));
    for (long k = 1; k <= n_scan; ++k) {
        const double t = std::min(static_cast<double>(k) * step, horizon);
        if (margin_at(x0, bath, t) <= 0.0) {
            lo = static_cast<double>(k - 1) * step;
            hi = t;
            bracketed = true;
            break;
        }
    }
    if (!bracketed) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        return DeathResult{DeathStatus::never,
                           std::numeric_limits<double>::infinity(),
                           nan,
                           nan,
                           horizon,
                           horizon};
    }

    while (hi - lo > t_tol) {
        const double mid = 0.5 * (lo + hi);
        if (margin_at(x0, bath, mid) <= 0.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    return DeathResult{DeathStatus::finite,
                       hi,
                       decay_pair(bath, hi).omega_sq,
                       energy_report(x0, bath, hi, eq).delta_e,
                       lo,
                       hi};
}

double energy_at_death(const XState& x0, const BathParams& bath,
                       const QubitEnergy& eq, double t_tol) {
    const DeathResult r = death_time(x0, bath, eq, t_tol);
    switch (r.status) {
        case DeathStatus::finite:
            return r.delta_e_at_death;
        case DeathStatus::already_separable:
            return 0.0;
        case DeathStatus::never:
            break;
    }
    throw std::domain_error(
        "energy_at_death: state never disentangles within the horizon");
}

}  // namespace esd
