#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>

#include "esd/lindblad.hpp"
#include "esd/random.hpp"
#include "esd/xstate.hpp"

using namespace esd;
using Complex = std::complex<double>;

namespace {

Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& p, const Eigen::Matrix2cd& q) {
    Eigen::Matrix4cd out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = p(i, j) * q;
    return out;
}

// Textbook dense evaluation of the generator, built from explicit jump
// matrices.  Slow and obviously correct; pins the production right-hand side.
Eigen::Matrix4cd dense_rhs(const Eigen::Matrix4cd& rho, const LindbladSpec& s) {
    Eigen::Matrix2cd lower = Eigen::Matrix2cd::Zero();
    lower(1, 0) = 1.0;  // |-><+| in the (|+>, |->) basis
    const Eigen::Matrix2cd raise = lower.adjoint();
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();

    struct Term {
        double rate;
        Eigen::Matrix4cd op;
    };
    const Term terms[] = {
        {s.lower_a, kron2(lower, id)},
        {s.raise_a, kron2(raise, id)},
        {s.lower_b, kron2(id, lower)},
        {s.raise_b, kron2(id, raise)},
    };

    Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
    for (const Term& t : terms) {
        const Eigen::Matrix4cd ldl = t.op.adjoint() * t.op;
        out += t.rate * (t.op * rho * t.op.adjoint() -
                         0.5 * (ldl * rho + rho * ldl));
    }
    return out;
}

Eigen::Matrix4cd random_hermitian(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Eigen::Matrix4cd m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = Complex(u(rng), u(rng));
    return 0.5 * (m + m.adjoint()).eval();
}

Eigen::Matrix4cd random_density(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Eigen::Matrix4cd g;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g(i, j) = Complex(u(rng), u(rng));
    Eigen::Matrix4cd rho = g * g.adjoint();
    rho /= rho.trace();
    return rho;
}

}  // namespace

TEST_CASE("embedding an X state") {
    const DensityMatrix4 pure = embed_xstate(XState(1.0, 0.0, 0.0, 0.0, 0.0));
    CHECK(pure(0, 0) == Complex(1.0));
    CHECK(pure.cwiseAbs().sum() == 1.0);

    // Bell-plus embeds to a rank-1 projector: rho^2 = rho
    const DensityMatrix4 bell = embed_xstate(preset_state("bell-plus"));
    CHECK((bell * bell - bell).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK(is_valid_density(bell));
}

TEST_CASE("embed/extract round trip on random states") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const XState x = random_xstate(rng);
        const XState y = extract_xstate(embed_xstate(x));
        CHECK(y.a() == x.a());
        CHECK(y.b() == x.b());
        CHECK(y.c() == x.c());
        CHECK(y.d() == x.d());
        CHECK(y.z() == x.z());
    }
}

TEST_CASE("extraction rejects non-X matrices") {
    DensityMatrix4 rho = embed_xstate(XState(0.25, 0.25, 0.25, 0.25, 0.1));
    rho(0, 1) = 1e-3;
    rho(1, 0) = 1e-3;
    CHECK_THROWS_AS(extract_xstate(rho), StructureError);

    DensityMatrix4 imag_z = embed_xstate(XState(0.25, 0.25, 0.25, 0.25, 0.0));
    imag_z(1, 2) = Complex(0.0, 1e-3);
    imag_z(2, 1) = Complex(0.0, -1e-3);
    CHECK_THROWS_AS(extract_xstate(imag_z), StructureError);
}

TEST_CASE("generator annihilates the thermal steady state") {
    for (double nbar : {0.0, 0.5, 1.0, 3.0}) {
        const LindbladSpec spec = LindbladSpec::from_bath(BathParams(1.0, nbar));
        const NoiseFactors nf = noise_factors(nbar);
        DensityMatrix4 steady = DensityMatrix4::Zero();
        steady(0, 0) = nf.n2;
        steady(1, 1) = nf.n3;
        steady(2, 2) = nf.n3;
        steady(3, 3) = nf.n1;
        CHECK(lindblad_rhs(steady, spec).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("ground state is dark at zero temperature") {
    const LindbladSpec spec = LindbladSpec::from_bath(BathParams(1.0, 0.0));
    DensityMatrix4 ground = DensityMatrix4::Zero();
    ground(3, 3) = 1.0;
    CHECK(lindblad_rhs(ground, spec).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("generator derivative of the Bell state at t=0, zero temperature") {
    const LindbladSpec spec = LindbladSpec::from_bath(BathParams(1.0, 0.0));
    const DensityMatrix4 rhs = lindblad_rhs(embed_xstate(preset_state("bell-plus")), spec);
    CHECK(rhs(0, 0).real() == doctest::Approx(0.0));
    CHECK(rhs(1, 1).real() == doctest::Approx(-0.5));
    CHECK(rhs(2, 2).real() == doctest::Approx(-0.5));
    CHECK(rhs(3, 3).real() == doctest::Approx(1.0));
    CHECK(rhs(1, 2).real() == doctest::Approx(-0.5));

    // cross-check against the t-derivative of the closed-form propagator
    const BathParams bath(1.0, 0.0);
    const double h = 1e-6;
    const XState fwd = evolve_xstate(preset_state("bell-plus"), bath, h);
    const XState prev = preset_state("bell-plus");
    CHECK(rhs(1, 1).real() == doctest::Approx((fwd.b() - prev.b()) / h).epsilon(1e-5));
    CHECK(rhs(3, 3).real() == doctest::Approx((fwd.d() - prev.d()) / h).epsilon(1e-5));
    CHECK(rhs(1, 2).real() == doctest::Approx((fwd.z() - prev.z()) / h).epsilon(1e-5));
}

TEST_CASE("production right-hand side matches the dense textbook form") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const Eigen::Matrix4cd rho = random_hermitian(rng);
        for (double nbar : {0.0, 0.8, 2.5}) {
            const LindbladSpec spec = LindbladSpec::from_bath(BathParams(1.4, nbar));
            const Eigen::Matrix4cd got = lindblad_rhs(rho, spec);
            const Eigen::Matrix4cd want = dense_rhs(rho, spec);
            CHECK((got - want).cwiseAbs().maxCoeff() <= 1e-14);
        }
    }
}

TEST_CASE("integration basics") {
    const BathParams bath(1.0, 1.0);
    const LindbladSpec spec = LindbladSpec::from_bath(bath);
    const DensityMatrix4 rho0 = embed_xstate(preset_state("bell-plus"));

    SUBCASE("t = 0 returns the input") {
        const DensityMatrix4 r = integrate(rho0, spec, 0.0, 0.01);
        CHECK((r - rho0).cwiseAbs().maxCoeff() == 0.0);
    }

    SUBCASE("invalid arguments are rejected") {
        CHECK_THROWS_AS(integrate(rho0, spec, -1.0, 0.01), std::domain_error);
        CHECK_THROWS_AS(integrate(rho0, spec, 1.0, 0.0), std::domain_error);
    }

    SUBCASE("grossly oversized steps fail to converge") {
        CHECK_THROWS_AS(integrate(rho0, spec, 50.0 / bath.relaxation_rate(),
                                  25.0 / bath.relaxation_rate()),
                        IntegrationError);
    }
}

TEST_CASE("integrated X states match the closed-form propagator") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 20; ++i) {
        const XState x0 = random_xstate(rng);
        for (double nbar : {0.0, 1.0}) {
            const BathParams bath(1.0, nbar);
            const LindbladSpec spec = LindbladSpec::from_bath(bath);
            const double t = 0.5 / bath.relaxation_rate();
            const DensityMatrix4 numeric =
                integrate(embed_xstate(x0), spec, t, LindbladSpec::default_dt(bath));
            const DensityMatrix4 analytic = embed_xstate(evolve_xstate(x0, bath, t));
            CHECK((numeric - analytic).cwiseAbs().maxCoeff() <= 1e-8);

            const XState xt = extract_xstate(numeric);  // no StructureError
            CHECK(std::abs(xt.z() - evolve_xstate(x0, bath, t).z()) <= 1e-8);
        }
    }
}

TEST_CASE("thermal Bell evolution cross-checked elementwise against the oracle") {
    const BathParams bath(1.0, 1.0);
    const LindbladSpec spec = LindbladSpec::from_bath(bath);
    const DensityMatrix4 numeric = integrate(embed_xstate(preset_state("bell-plus")),
                                             spec, 0.5, LindbladSpec::default_dt(bath));
    // frozen expected values for nbar=1, Gamma=1, t=0.5
    CHECK(numeric(0, 0).real() == doctest::Approx(0.12483955815696688).epsilon(1e-10));
    CHECK(numeric(1, 1).real() == doctest::Approx(0.24568213520110474).epsilon(1e-10));
    CHECK(numeric(2, 2).real() == doctest::Approx(0.24568213520110474).epsilon(1e-10));
    CHECK(numeric(3, 3).real() == doctest::Approx(0.38379617144082358).epsilon(1e-10));
    CHECK(numeric(1, 2).real() == doctest::Approx(0.11156508007421491).epsilon(1e-10));

    const XState analytic = evolve_xstate(preset_state("bell-plus"), bath, 0.5);
    CHECK((numeric - embed_xstate(analytic)).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("integration preserves trace, Hermiticity and positivity off the X family") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 10; ++i) {
        const DensityMatrix4 rho0 = random_density(rng);
        const BathParams bath(1.0, 0.6);
        const LindbladSpec spec = LindbladSpec::from_bath(bath);
        const DensityMatrix4 r = integrate(rho0, spec, 1.2 / bath.relaxation_rate(),
                                           LindbladSpec::default_dt(bath));
        CHECK(std::abs(r.trace() - Complex(1.0)) <= 1e-9);
        CHECK((r - r.adjoint()).cwiseAbs().maxCoeff() <= 1e-9);
        Eigen::SelfAdjointEigenSolver<DensityMatrix4> es(r);
        CHECK(es.eigenvalues().minCoeff() >= -1e-9);
    }
}

TEST_CASE("eigenvalue concurrence") {
    CHECK(wootters_concurrence(embed_xstate(preset_state("bell-plus"))) ==
          doctest::Approx(1.0).epsilon(1e-12));

    const DensityMatrix4 mixed = 0.25 * DensityMatrix4::Identity();
    CHECK(wootters_concurrence(mixed) == 0.0);

    // Werner p=0.8: both routes give (3p-1)/2 = 0.7
    const XState w = werner_state(0.8);
    CHECK(wootters_concurrence(embed_xstate(w)) ==
          doctest::Approx(0.7).epsilon(1e-12));
    CHECK(concurrence_x(w) == doctest::Approx(0.7).epsilon(1e-14));

    CHECK_THROWS_AS(wootters_concurrence(2.0 * mixed), std::domain_error);
}

TEST_CASE("concurrence dual path agrees on random X states") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 300; ++i) {
        const XState x = random_xstate(rng);
        CHECK(std::abs(wootters_concurrence(embed_xstate(x)) - concurrence_x(x)) <=
              1e-10);
    }
}

TEST_CASE("density validation") {
    CHECK(is_valid_density(embed_xstate(preset_state("bell-plus"))));
    CHECK_FALSE(is_valid_density(2.0 * DensityMatrix4::Identity()));

    DensityMatrix4 non_hermitian = 0.25 * DensityMatrix4::Identity();
    non_hermitian(0, 1) = Complex(0.0, 1e-3);
    CHECK_FALSE(is_valid_density(non_hermitian));

    DensityMatrix4 negative = DensityMatrix4::Zero();
    negative(0, 0) = 1.1;
    negative(1, 1) = -0.1;
    CHECK_FALSE(is_valid_density(negative));
}
