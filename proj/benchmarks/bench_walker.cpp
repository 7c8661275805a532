#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "support/oracles.hpp"
#include "techrank/stats.hpp"
#include "techrank/walker.hpp"

namespace {

techrank::BipartiteGraph graph_of(std::size_t companies) {
    std::mt19937_64 rng(companies);
    return techrank::testing::random_graph(companies, companies / 3 + 2, 0.05, rng);
}

void BM_TransitionMatrices(benchmark::State& state) {
    const auto g = graph_of(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(techrank::transition_matrices(g, 0.52, -1.04));
    state.counters["edges"] = static_cast<double>(g.edge_count());
}
BENCHMARK(BM_TransitionMatrices)->RangeMultiplier(4)->Range(16, 4096);

void BM_Step(benchmark::State& state) {
    const auto g = graph_of(static_cast<std::size_t>(state.range(0)));
    const auto tm = techrank::transition_matrices(g, 0.52, -1.04);
    auto s = techrank::init_weights(g);
    for (auto _ : state) {
        s = techrank::step(g, tm, s);
        benchmark::DoNotOptimize(s.companies.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(g.edge_count()));
}
BENCHMARK(BM_Step)->RangeMultiplier(4)->Range(16, 4096);

void BM_RunToConvergence(benchmark::State& state) {
    const auto g = graph_of(static_cast<std::size_t>(state.range(0)));
    techrank::WalkerParams p;
    p.alpha = 0.52;
    p.beta = -1.04;
    std::size_t iterations = 0;
    for (auto _ : state) {
        const auto s = techrank::run(g, p);
        iterations = s.iterations;
        benchmark::DoNotOptimize(s.companies.data());
    }
    state.counters["walker_iterations"] = static_cast<double>(iterations);
}
BENCHMARK(BM_RunToConvergence)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMillisecond);

void BM_Spearman(benchmark::State& state) {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> n(0.0, 1.0);
    std::vector<double> x(static_cast<std::size_t>(state.range(0)));
    std::vector<double> y(x.size());
    for (auto& v : x) v = n(rng);
    for (auto& v : y) v = n(rng);
    for (auto _ : state) benchmark::DoNotOptimize(techrank::spearman(x, y));
}
BENCHMARK(BM_Spearman)->RangeMultiplier(8)->Range(8, 32768);

}  // namespace

BENCHMARK_MAIN();
