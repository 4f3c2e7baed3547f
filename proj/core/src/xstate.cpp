#include "esd/xstate.hpp"

#include <charconv>
#include <cmath>

namespace esd {

BathParams::BathParams(double gamma_rate_, double nbar_)
    : gamma_rate(gamma_rate_), nbar(nbar_) {
    if (!(gamma_rate > 0.0) || !std::isfinite(gamma_rate)) {
        throw std::domain_error("BathParams: gamma_rate must be > 0");
    }
    if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
        throw std::domain_error("BathParams: nbar must be >= 0");
    }
}

XState::XState(double a, double b, double c, double d, double z, double tol)
    : a_(a), b_(b), c_(c), d_(d), z_(z) {
    if (!(tol >= 0.0)) throw std::domain_error("XState: tolerance must be >= 0");
    for (double p : {a, b, c, d, z}) {
        if (!std::isfinite(p)) throw std::domain_error("XState: non-finite parameter");
    }
    if (a < -tol || b < -tol || c < -tol || d < -tol) {
        throw std::domain_error("XState: negative population");
    }
    const double trace = a + b + c + d;
    if (std::abs(trace - 1.0) > tol) {
        throw std::domain_error("XState: trace " + std::to_string(trace) + " != 1");
    }
    const double bc = std::max(0.0, b * c);
    if (std::abs(z) > std::sqrt(bc) + tol) {
        throw std::domain_error("XState: |z| > sqrt(b*c) violates positivity");
    }
}

NoiseFactors noise_factors(double nbar) {
    if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
        throw std::domain_error("noise_factors: nbar must be >= 0");
    }
    const double denom = (2.0 * nbar + 1.0) * (2.0 * nbar + 1.0);
    return NoiseFactors{(nbar + 1.0) * (nbar + 1.0) / denom,
                        nbar * nbar / denom,
                        nbar * (nbar + 1.0) / denom};
}

DecayPair decay_pair(const BathParams& bath, double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw std::domain_error("decay_pair: t must be >= 0");
    }
    const double gamma = std::exp(-0.5 * bath.relaxation_rate() * t);
    return DecayPair{gamma, 1.0 - gamma * gamma};
}

XState evolve_xstate(const XState& x0, const BathParams& bath, double t) {
    const NoiseFactors nf = noise_factors(bath.nbar);
    const DecayPair dp = decay_pair(bath, t);
    const double g2 = dp.gamma * dp.gamma;
    const double w2 = dp.omega_sq;
    const double g4 = g2 * g2;
    const double w4 = w2 * w2;
    const double gw = g2 * w2;

    const double a = x0.a(), b = x0.b(), c = x0.c(), d = x0.d(), z = x0.z();

    const double at = nf.n1 * g4 * a + nf.n2 * (a + w2 * (b + c) + w4 * d) +
                      nf.n3 * (2.0 * g2 * a + gw * (b + c));
    const double bt = nf.n1 * (g2 * b + gw * a) + nf.n2 * (g2 * b + gw * d) +
                      nf.n3 * (b + g4 * b + w2 * (a + d) + w4 * c);
    const double ct = nf.n1 * (g2 * c + gw * a) + nf.n2 * (g2 * c + gw * d) +
                      nf.n3 * (c + w2 * (d + a) + w4 * b + g4 * c);
    const double dt = nf.n1 * (d + w2 * (b + c) + w4 * a) + nf.n2 * g4 * d +
                      nf.n3 * (2.0 * g2 * d + gw * (b + c));
    const double zt = g2 * z;

    return XState(at, bt, ct, dt, zt);
}

namespace {

// |z| - sqrt(a*d); the state is separable iff this is <= 0.
double concurrence_excess(const XState& x) {
    return std::abs(x.z()) - std::sqrt(std::max(0.0, x.a() * x.d()));
}

}  // namespace

double concurrence_x(const XState& x) {
    return 2.0 * std::max(0.0, concurrence_excess(x));
}

bool is_fully_disentangled(const XState& x) {
    return concurrence_excess(x) <= 0.0;
}

XState werner_state(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::domain_error("werner_state: p must lie in [0, 1]");
    }
    return XState((1.0 - p) / 4.0, (1.0 + p) / 4.0, (1.0 + p) / 4.0,
                  (1.0 - p) / 4.0, -p / 2.0);
}

XState preset_state(std::string_view name) {
    if (name == "bell-plus") return XState(0.0, 0.5, 0.5, 0.0, 0.5);
    if (name == "bell-minus") return XState(0.0, 0.5, 0.5, 0.0, -0.5);
    if (name == "ye4-third") {
        return XState(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 0.0, 1.0 / 3.0);
    }
    if (name.starts_with("werner(") && name.ends_with(")")) {
        const std::string_view arg = name.substr(7, name.size() - 8);
        double p = 0.0;
        const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), p);
        if (ec != std::errc{} || ptr != arg.data() + arg.size()) {
            throw std::domain_error("preset_state: bad werner parameter '" +
                                    std::string(arg) + "'");
        }
        return werner_state(p);
    }
    throw std::domain_error("preset_state: unknown preset '" + std::string(name) +
                            "'");
}

}  // namespace esd
