// Serial vs OpenMP index kernels, and closed-form evaluation vs composite construction.

#include <benchmark/benchmark.h>

#include "fjoin/closed_form.hpp"
#include "fjoin/harness.hpp"
#include "fjoin/indices.hpp"
#include "fjoin/join.hpp"

namespace {

using namespace fjoin;

Graph sparse_graph(std::size_t n, std::uint64_t seed) { return random_graph(n, 3 * n, seed); }

void BM_InvariantsSerial(benchmark::State& state) {
    const Graph g = sparse_graph(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(serial::invariants(g));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.vertex_count() + g.edge_count()));
}
BENCHMARK(BM_InvariantsSerial)->RangeMultiplier(10)->Range(1'000, 1'000'000)->Unit(benchmark::kMicrosecond);

void BM_InvariantsParallel(benchmark::State& state) {
    const Graph g = sparse_graph(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(invariants(g));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.vertex_count() + g.edge_count()));
}
BENCHMARK(BM_InvariantsParallel)->RangeMultiplier(10)->Range(1'000, 1'000'000)->Unit(benchmark::kMicrosecond);

void BM_ClosedForm(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Graph g1 = sparse_graph(n, 1);
    const Graph g2 = sparse_graph(n, 2);
    for (auto _ : state) {
        const GraphInvariants a = invariants(g1);
        const GraphInvariants b = invariants(g2);
        for (OperationSpec spec : kAllSpecs) benchmark::DoNotOptimize(theorem_value(spec, a, b));
    }
}
BENCHMARK(BM_ClosedForm)->Arg(100)->Arg(300)->Arg(1'000)->Arg(100'000)->Unit(benchmark::kMicrosecond);

// Construction cost grows with n1*(n2 + m1) join edges, so only small sizes.
void BM_Construction(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Graph g1 = sparse_graph(n, 1);
    const Graph g2 = sparse_graph(n, 2);
    for (auto _ : state)
        for (OperationSpec spec : kAllSpecs) benchmark::DoNotOptimize(construction_value(spec, g1, g2));
}
BENCHMARK(BM_Construction)->Arg(100)->Arg(300)->Arg(1'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
