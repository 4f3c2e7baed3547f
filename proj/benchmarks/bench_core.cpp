#include <benchmark/benchmark.h>

#include <random>

#include "esd/death.hpp"
#include "esd/lindblad.hpp"
#include "esd/random.hpp"
#include "esd/xstate.hpp"

namespace {

const esd::BathParams kBath(1.0, 1.0);
const esd::QubitEnergy kEnergy(1.0);

void BM_EvolveXState(benchmark::State& state) {
    const esd::XState x = esd::preset_state("bell-plus");
    double t = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(esd::evolve_xstate(x, kBath, t));
        t += 1e-6;
    }
}
BENCHMARK(BM_EvolveXState);

void BM_ConcurrenceX(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const esd::XState x = esd::random_xstate(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(esd::concurrence_x(x));
    }
}
BENCHMARK(BM_ConcurrenceX);

void BM_WoottersConcurrence(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const esd::DensityMatrix4 rho = esd::embed_xstate(esd::random_xstate(rng));
    for (auto _ : state) {
        benchmark::DoNotOptimize(esd::wootters_concurrence(rho));
    }
}
BENCHMARK(BM_WoottersConcurrence);

void BM_LindbladRhs(benchmark::State& state) {
    const esd::LindbladSpec spec = esd::LindbladSpec::from_bath(kBath);
    const esd::DensityMatrix4 rho = esd::embed_xstate(esd::preset_state("bell-plus"));
    for (auto _ : state) {
        benchmark::DoNotOptimize(esd::lindblad_rhs(rho, spec));
    }
}
BENCHMARK(BM_LindbladRhs);

void BM_IntegrateOneRelaxationTime(benchmark::State& state) {
    const esd::LindbladSpec spec = esd::LindbladSpec::from_bath(kBath);
    const esd::DensityMatrix4 rho = esd::embed_xstate(esd::preset_state("bell-plus"));
    const double t = 1.0 / kBath.relaxation_rate();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            esd::integrate(rho, spec, t, esd::LindbladSpec::default_dt(kBath)));
    }
}
BENCHMARK(BM_IntegrateOneRelaxationTime);

void BM_DeathTime(benchmark::State& state) {
    const esd::XState x = esd::preset_state("bell-plus");
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            esd::death_time(x, kBath, kEnergy, esd::default_death_tol(kBath)));
    }
}
BENCHMARK(BM_DeathTime);

}  // namespace

BENCHMARK_MAIN();
