#include "esd/lindblad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <string>

namespace esd {

namespace {

// Each jump operator has exactly two unit entries; (target, source) index
// pairs in the |++>,|+->,|-+>,|--> basis.  Qubit A is excited on {0,1},
// qubit B on {0,2}.
struct Channel {
    double rate;
    int target[2];
    int source[2];
};

std::array<Channel, 4> channels_of(const LindbladSpec& s) {
    return {{
        {s.lower_a, {2, 3}, {0, 1}},  // sigma-_A (x) I
        {s.raise_a, {0, 1}, {2, 3}},  // sigma+_A (x) I
        {s.lower_b, {1, 3}, {0, 2}},  // I (x) sigma-_B
        {s.raise_b, {0, 2}, {1, 3}},  // I (x) sigma+_B
    }};
}

constexpr double kHalvingTol = 1e-9;
constexpr double kTraceDriftTol = 1e-9;
constexpr double kPatternTol = 1e-10;
constexpr double kEigClampTol = 1e-12;

}  // namespace

LindbladSpec::LindbladSpec(double lower_a_, double raise_a_, double lower_b_,
                           double raise_b_)
    : lower_a(lower_a_), raise_a(raise_a_), lower_b(lower_b_), raise_b(raise_b_) {
    for (double r : {lower_a, raise_a, lower_b, raise_b}) {
        if (!(r >= 0.0) || !std::isfinite(r)) {
            throw std::domain_error("LindbladSpec: channel rates must be >= 0");
        }
    }
}

LindbladSpec LindbladSpec::from_bath(const BathParams& bath) {
    const double down = bath.gamma_rate * (bath.nbar + 1.0);
    const double up = bath.gamma_rate * bath.nbar;
    return LindbladSpec(down, up, down, up);
}

bool is_valid_density(const DensityMatrix4& rho, double herm_tol,
                      double trace_tol, double eig_floor) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > herm_tol) return false;
    if (std::abs(rho.trace() - std::complex<double>(1.0, 0.0)) > trace_tol) {
        return false;
    }
    Eigen::SelfAdjointEigenSolver<DensityMatrix4> es(rho);
    if (es.info() != Eigen::Success) return false;
    return es.eigenvalues().minCoeff() >= eig_floor;
}

DensityMatrix4 embed_xstate(const XState& x) {
    DensityMatrix4 rho = DensityMatrix4::Zero();
    rho(0, 0) = x.a();
    rho(1, 1) = x.b();
    rho(2, 2) = x.c();
    rho(3, 3) = x.d();
    rho(1, 2) = x.z();
    rho(2, 1) = x.z();
    return rho;
}

XState extract_xstate(const DensityMatrix4& rho) {
    double max_off = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const bool on_pattern = i == j || (i == 1 && j == 2) || (i == 2 && j == 1);
            if (!on_pattern) max_off = std::max(max_off, std::abs(rho(i, j)));
        }
        max_off = std::max(max_off, std::abs(rho(i, i).imag()));
    }
    if (max_off >= kPatternTol || std::abs(rho(1, 2).imag()) >= kPatternTol) {
        throw StructureError(
            "extract_xstate: matrix has off-X-pattern weight " +
            std::to_string(max_off) + "; dynamics left the X family");
    }
    // Integration error (up to the 1e-9 step-halving tolerance) exceeds the
    // strict construction tolerance, so extraction validates more loosely.
    return XState(rho(0, 0).real(), rho(1, 1).real(), rho(2, 2).real(),
                  rho(3, 3).real(), rho(1, 2).real(), 1e-8);
}

DensityMatrix4 lindblad_rhs(const DensityMatrix4& rho, const LindbladSpec& spec) {
    const auto channels = channels_of(spec);

    // Decay weights m_s = sum over channels populating source index s.
    Eigen::Vector4d m = Eigen::Vector4d::Zero();
    for (const Channel& ch : channels) {
        m(ch.source[0]) += ch.rate;
        m(ch.source[1]) += ch.rate;
    }

    DensityMatrix4 out = DensityMatrix4::Zero();
    // Jump terms: L rho L^+ moves the 2x2 source block onto the target block.
    for (const Channel& ch : channels) {
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                out(ch.target[i], ch.target[j]) +=
                    ch.rate * rho(ch.source[i], ch.source[j]);
            }
        }
    }
    // Anticommutator with the (diagonal) total decay operator.
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            out(i, j) -= 0.5 * (m(i) + m(j)) * rho(i, j);
        }
    }
    return out;
}

namespace {

DensityMatrix4 rk4_run(const DensityMatrix4& rho0, const LindbladSpec& spec,
                       double t, long n_steps) {
    const double h = t / static_cast<double>(n_steps);
    DensityMatrix4 rho = rho0;
    for (long i = 0; i < n_steps; ++i) {
        const DensityMatrix4 k1 = lindblad_rhs(rho, spec);
        const DensityMatrix4 k2 = lindblad_rhs(rho + (0.5 * h) * k1, spec);
        const DensityMatrix4 k3 = lindblad_rhs(rho + (0.5 * h) * k2, spec);
        const DensityMatrix4 k4 = lindblad_rhs(rho + h * k3, spec);
        rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return rho;
}

}  // namespace

DensityMatrix4 integrate(const DensityMatrix4& rho0, const LindbladSpec& spec,
                         double t, double dt) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw std::domain_error("integrate: t must be >= 0");
    }
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw std::domain_error("integrate: dt must be > 0");
    }
    if (t == 0.0) return rho0;

    long n = static_cast<long>(std::ceil(t / dt * (1.0 - 1e-12)));
    n = std::max<long>(n, 1);

    DensityMatrix4 coarse = rk4_run(rho0, spec, t, n);
    for (int halving = 0; halving <= 2; ++halving) {
        n *= 2;
        const DensityMatrix4 fine = rk4_run(rho0, spec, t, n);
        if ((fine - coarse).cwiseAbs().maxCoeff() < kHalvingTol) {
            const double drift = std::abs(fine.trace() - rho0.trace());
            if (drift > kTraceDriftTol) {
                throw IntegrationError("integrate: trace drifted by " +
                                       std::to_string(drift));
            }
            return fine;
        }
        coarse = fine;
    }
    throw IntegrationError(
        "integrate: step-halving did not converge to 1e-9 after two halvings; "
        "decrease dt");
}

double wootters_concurrence(const DensityMatrix4& rho) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-8 ||
        std::abs(rho.trace() - std::complex<double>(1.0, 0.0)) > 1e-8) {
        throw std::domain_error(
            "wootters_concurrence: input is not a density matrix");
    }

    DensityMatrix4 spin_flip = DensityMatrix4::Zero();
    spin_flip(0, 3) = -1.0;
    spin_flip(1, 2) = 1.0;
    spin_flip(2, 1) = 1.0;
    spin_flip(3, 0) = -1.0;

    const DensityMatrix4 r = rho * spin_flip * rho.conjugate() * spin_flip;
    Eigen::ComplexEigenSolver<DensityMatrix4> es(r, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("wootters_concurrence: eigenvalue solver failed");
    }

    std::array<double, 4> lambda{};
    for (int i = 0; i < 4; ++i) {
        double ev = es.eigenvalues()(i).real();
        if (ev < 0.0) {
            if (ev < -kEigClampTol) {
                throw std::runtime_error(
                    "wootters_concurrence: eigenvalue " + std::to_string(ev) +
                    " below clamping tolerance");
            }
            ev = 0.0;
        }
        lambda[i] = std::sqrt(ev);
    }
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    const double c = lambda[0] - lambda[1] - lambda[2] - lambda[3];
    return std::clamp(c, 0.0, 1.0);
}

}  // namespace esd
