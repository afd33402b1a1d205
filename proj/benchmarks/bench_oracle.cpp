#include <benchmark/benchmark.h>

#include "pqmet/oracle.hpp"

namespace {

void ExhaustiveAudit(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto space = pqmet::random_finite_space(42, n);
    for (auto _ : state) {
        auto audit = pqmet::exhaustive_kannan_audit(space);
        benchmark::DoNotOptimize(audit);
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(pqmet::self_map_count(n)));
}
BENCHMARK(ExhaustiveAudit)->DenseRange(2, 7, 1)->Unit(benchmark::kMillisecond);

void ExhaustiveAuditSingleThread(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto space = pqmet::random_finite_space(42, n);
    pqmet::AuditOptions opts;
    opts.threads = 1;
    for (auto _ : state) {
        auto audit = pqmet::exhaustive_kannan_audit(space, opts);
        benchmark::DoNotOptimize(audit);
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(pqmet::self_map_count(n)));
}
BENCHMARK(ExhaustiveAuditSingleThread)->DenseRange(5, 7, 1)->Unit(benchmark::kMillisecond);

void RandomSpaceRejection(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto space = pqmet::random_finite_space(++seed, n);
        benchmark::DoNotOptimize(space);
    }
}
BENCHMARK(RandomSpaceRejection)->DenseRange(2, 6, 1);

} // namespace

BENCHMARK_MAIN();
