#include <complex>
#include <vector>

#include <benchmark/benchmark.h>

#include "nlsdtn/hierarchy.hpp"
#include "nlsdtn/linear_halfline.hpp"
#include "nlsdtn/oracles.hpp"

namespace {

using nlsdtn::cplx;

nlsdtn::ProblemSpec pair_spec(int order_max) {
    nlsdtn::ProblemSpec s;
    s.omega = 2.5;
    s.lambda = -1;
    s.order_max = order_max;
    s.dirichlet.set_omega(s.omega);
    s.dirichlet.set(1, 1, cplx(0.7, 0.2));
    s.dirichlet.set(1, -1, cplx(-0.3, 0.5));
    return s;
}

void BM_HierarchySolve(benchmark::State& state) {
    const auto spec = pair_spec(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(nlsdtn::solve(spec));
}
BENCHMARK(BM_HierarchySolve)->DenseRange(1, 9, 2)->Unit(benchmark::kMillisecond);

void BM_RiccatiResidual(benchmark::State& state) {
    const auto sol = nlsdtn::solve(pair_spec(7));
    const std::vector<cplx> ks{{0.9, 0.4}, {1.2, 0.8}, {0.5, 1.3}, {1.6, -0.2}, {0.7, 0.9}};
    for (auto _ : state) benchmark::DoNotOptimize(nlsdtn::riccati_residual_all(sol, ks));
}
BENCHMARK(BM_RiccatiResidual)->Unit(benchmark::kMillisecond);

void BM_NeumannFromHistory(benchmark::State& state) {
    nlsdtn::LinearProblemSpec spec;
    spec.g0 = [](double t) { return std::polar(1.0, t); };
    spec.g0_dot = [](double t) { return cplx(0.0, 1.0) * std::polar(1.0, t); };
    spec.omega = 1.0;
    const double t = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(nlsdtn::neumann_from_history(spec, t));
}
BENCHMARK(BM_NeumannFromHistory)->Arg(10)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_FloquetMonodromy(benchmark::State& state) {
    const auto spec = pair_spec(5);
    const auto sol = nlsdtn::solve(spec);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            nlsdtn::floquet_monodromy(spec.dirichlet, sol.neumann, 0.01, spec.omega, spec.lambda, cplx(0.5, 0.4)));
    }
}
BENCHMARK(BM_FloquetMonodromy)->Unit(benchmark::kMillisecond);

void BM_TwoSolitonExpansion(benchmark::State& state) {
    const std::vector<double> eps{0.0005, 0.001, 0.002, 0.004, 0.008};
    for (auto _ : state) benchmark::DoNotOptimize(nlsdtn::two_soliton_expansion(eps));
}
BENCHMARK(BM_TwoSolitonExpansion)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
