#include <benchmark/benchmark.h>

#include "pqmet/axioms.hpp"
#include "pqmet/kannan.hpp"
#include "pqmet/solver.hpp"
#include "pqmet/space.hpp"

namespace {

void AxiomsSampled(benchmark::State& state) {
    const auto space = pqmet::builtin_space("paper_example");
    const auto strategy =
        pqmet::CheckStrategy::sampled(static_cast<std::uint64_t>(state.range(0)), 42);
    for (auto _ : state) {
        auto report = pqmet::check_axioms(space, strategy);
        benchmark::DoNotOptimize(report);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(AxiomsSampled)->RangeMultiplier(4)->Range(1 << 10, 1 << 18);

void KannanCheckSampled(benchmark::State& state) {
    const auto space = pqmet::builtin_space("paper_example");
    const auto map = pqmet::builtin_mapping("example_map");
    const pqmet::KannanConstant lambda(2.0 / 15.0);
    const auto strategy =
        pqmet::CheckStrategy::sampled(static_cast<std::uint64_t>(state.range(0)), 42);
    for (auto _ : state) {
        auto report = pqmet::check_kannan(space, map, lambda, strategy);
        benchmark::DoNotOptimize(report);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(KannanCheckSampled)->RangeMultiplier(4)->Range(1 << 10, 1 << 18);

void EstimateLambda(benchmark::State& state) {
    const auto space = pqmet::builtin_space("paper_example");
    const auto map = pqmet::builtin_mapping("example_map");
    const auto strategy =
        pqmet::CheckStrategy::sampled(static_cast<std::uint64_t>(state.range(0)), 42);
    for (auto _ : state) {
        auto estimate = pqmet::estimate_lambda(space, map, strategy);
        benchmark::DoNotOptimize(estimate);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(EstimateLambda)->RangeMultiplier(4)->Range(1 << 12, 1 << 18);

void SolverIterate(benchmark::State& state) {
    const auto space = pqmet::builtin_space("paper_example");
    const auto map = pqmet::builtin_mapping("example_map");
    const double start = static_cast<double>(state.range(0));
    for (auto _ : state) {
        auto result = pqmet::iterate(space, map, pqmet::Point::coord(start));
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(SolverIterate)->Arg(64)->Arg(1 << 20);

} // namespace

BENCHMARK_MAIN();
