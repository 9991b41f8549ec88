#include <benchmark/benchmark.h>

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "ecnet/metrics.hpp"

namespace {

using namespace ecnet;

// G(n, m) with m = n * avg_degree / 2 sampled edge slots; duplicates and the
// rare loop collapse inside view_from_edges.
UndirectedView make_view(std::size_t n, std::size_t avg_degree) {
    std::mt19937_64 rng(4711);
    std::uniform_int_distribution<std::uint32_t> node(0, static_cast<std::uint32_t>(n - 1));
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    edges.reserve(n * avg_degree / 2);
    while (edges.size() < n * avg_degree / 2) {
        const std::uint32_t u = node(rng);
        const std::uint32_t v = node(rng);
        if (u != v) edges.emplace_back(u, v);
    }
    return view_from_edges(n, edges);
}

void BM_Closeness(benchmark::State& state) {
    const UndirectedView view = make_view(static_cast<std::size_t>(state.range(0)), 8);
    const auto threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        CentralityScores scores = closeness_centrality(view, threads);
        benchmark::DoNotOptimize(scores.score.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Closeness)->Args({1024, 1})->Args({4096, 1})->Args({4096, 4});

void BM_Betweenness(benchmark::State& state) {
    const UndirectedView view = make_view(static_cast<std::size_t>(state.range(0)), 8);
    const auto threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        CentralityScores scores = betweenness_centrality(view, threads);
        benchmark::DoNotOptimize(scores.score.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Betweenness)->Args({512, 1})->Args({2048, 1})->Args({2048, 4});

void BM_KCore(benchmark::State& state) {
    const UndirectedView view = make_view(static_cast<std::size_t>(state.range(0)), 8);
    for (auto _ : state) {
        CoreDecomposition cores = k_core_decomposition(view);
        benchmark::DoNotOptimize(cores.core_number.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_KCore)->RangeMultiplier(4)->Range(4096, 65536);

void BM_Clustering(benchmark::State& state) {
    const UndirectedView view = make_view(static_cast<std::size_t>(state.range(0)), 8);
    for (auto _ : state) {
        const double c = global_clustering_coefficient(view);
        benchmark::DoNotOptimize(c);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Clustering)->RangeMultiplier(4)->Range(4096, 65536);

void BM_DistanceSummarySampled(benchmark::State& state) {
    const UndirectedView view = make_view(static_cast<std::size_t>(state.range(0)), 8);
    for (auto _ : state) {
        DistanceSummary summary = distance_summary(view, /*exact_threshold=*/1000,
                                                   /*sample_size=*/256, /*seed=*/42);
        benchmark::DoNotOptimize(summary.mean_conventional);
    }
    state.SetItemsProcessed(state.iterations() * 256);
}
BENCHMARK(BM_DistanceSummarySampled)->Arg(16384)->Arg(65536);

}  // namespace

BENCHMARK_MAIN();
