#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "support/oracles.hpp"
#include "techrank/calibration.hpp"
#include "techrank/stats.hpp"

namespace {

// Full default grid (101 x 101 points) against a walker-generated truth.
void BM_CalibrateDefaultGrid(benchmark::State& state) {
    std::mt19937_64 rng(17);
    const auto companies = static_cast<std::size_t>(state.range(0));
    const auto g = techrank::testing::random_graph(companies, companies / 3 + 2, 0.15, rng);
    techrank::WalkerParams p;
    p.alpha = 0.52;
    p.beta = -1.04;
    const auto truth = techrank::normalize_minmax(techrank::run(g, p).companies);
    const auto threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        const auto r = techrank::calibrate(g, truth, techrank::Layer::Companies, techrank::GridSpec{}, {}, threads);
        benchmark::DoNotOptimize(r.rho_star);
    }
}
BENCHMARK(BM_CalibrateDefaultGrid)
    ->Args({10, 1})
    ->Args({30, 1})
    ->Args({100, 1})
    ->Args({30, 0})
    ->Unit(benchmark::kSecond)
    ->Iterations(1);

}  // namespace
