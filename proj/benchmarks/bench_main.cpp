#include <benchmark/benchmark.h>

#include "dmp/band.hpp"
#include "dmp/deformation.hpp"
#include "dmp/functional.hpp"
#include "dmp/minimax.hpp"
#include "dmp/oracle.hpp"
#include "dmp/rng.hpp"
#include "dmp/spectrum.hpp"

namespace {

using namespace dmp;

PotentialSpec desk_potential() {
    return PotentialSpec::trig_quadratic(
        6, 2.5, 1.0, 1.0, WeightFunction{WeightFunction::Kind::constant, 0.0, 6});
}

PeriodicSequence random_sequence(int m, Rng& rng) {
    PeriodicSequence u = PeriodicSequence::zeros(m);
    for (int s = 1; s <= m; ++s) u.set(s, rng.uniform(-2.0, 2.0));
    return u;
}

void BM_SpectrumClosedForm(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(laplacian_spectrum(m));
    }
}
BENCHMARK(BM_SpectrumClosedForm)->Arg(6)->Arg(16)->Arg(64);

void BM_SpectrumDense(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(laplacian_spectrum_dense(m));
    }
}
BENCHMARK(BM_SpectrumDense)->Arg(6)->Arg(16)->Arg(64);

void BM_ActionGradient(benchmark::State& state) {
    const FunctionalSpec f = FunctionalSpec::action(desk_potential());
    Rng rng(1);
    const PeriodicSequence u = random_sequence(6, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.gradient(u));
    }
}
BENCHMARK(BM_ActionGradient);

void BM_RelaxStep(benchmark::State& state) {
    const FunctionalSpec f = FunctionalSpec::action(desk_potential());
    const MountainGeometry g =
        find_ray_geometry(f, PeriodicSequence({1.0, -1.0, 0.0, 1.0, -1.0, 0.0}), 0.3);
    DiscretePath path = init_path(g, static_cast<int>(state.range(0)));
    std::vector<double> steps;
    RelaxOptions options;
    for (auto _ : state) {
        benchmark::DoNotOptimize(relax_step(path, f, options, steps));
    }
}
BENCHMARK(BM_RelaxStep)->Arg(64)->Arg(128);

void BM_NewtonRefine(benchmark::State& state) {
    const PotentialSpec p = desk_potential();
    const PeriodicSequence u0({1.0, -1.0, 0.0, 1.0, -1.0, 0.0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(newton_refine(u0, p, 1e-12, 60));
    }
}
BENCHMARK(BM_NewtonRefine);

void BM_Multistart(benchmark::State& state) {
    const PotentialSpec p = desk_potential();
    MultistartOptions options;
    options.random_starts = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(multistart(p, options, 7));
    }
}
BENCHMARK(BM_Multistart)->Arg(50)->Arg(500);

void BM_BandFlow(benchmark::State& state) {
    const ToyLandscape land = ToyLandscape::linear(1);
    const BandSpec band(0.0, 0.1, DSpec::empty());
    Eigen::VectorXd v(1);
    v << -0.075;
    for (auto _ : state) {
        benchmark::DoNotOptimize(flow(land, band, v, 0.2));
    }
}
BENCHMARK(BM_BandFlow);

void BM_MountainPassSolve(benchmark::State& state) {
    const FunctionalSpec f = FunctionalSpec::action(desk_potential());
    const MountainGeometry g =
        find_ray_geometry(f, PeriodicSequence({1.0, -1.0, 0.0, 1.0, -1.0, 0.0}), 0.3);
    SolveBudgets budgets;
    budgets.ensemble = 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mountain_pass_solve(f, g, 0.1, budgets, 42));
    }
}
BENCHMARK(BM_MountainPassSolve);

}  // namespace

BENCHMARK_MAIN();
