#include <benchmark/benchmark.h>

#include <random>

#include "contractix/canonical.hpp"
#include "contractix/contract.hpp"
#include "contractix/enumerate.hpp"
#include "contractix/graph6.hpp"
#include "contractix/homology.hpp"

using namespace contractix;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution edge(p);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (edge(rng)) g = g.with_edge(u, v);
    return g;
}

Graph octahedron() {
    Graph g = Graph::complete(6);
    g = g.without_edge(0, 1);
    g = g.without_edge(2, 3);
    g = g.without_edge(4, 5);
    return g;
}

void bm_canonical_random(benchmark::State& state) {
    std::mt19937 rng(1);
    int n = static_cast<int>(state.range(0));
    std::vector<Graph> pool;
    for (int i = 0; i < 64; ++i) pool.push_back(random_graph(rng, n, 0.4));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_form(pool[i++ % pool.size()]));
    }
}
BENCHMARK(bm_canonical_random)->Arg(8)->Arg(10)->Arg(12);

void bm_canonical_cycle(benchmark::State& state) {
    Graph g = Graph::cycle(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(bm_canonical_cycle)->Arg(8)->Arg(12);

void bm_canonical_complete(benchmark::State& state) {
    Graph g = Graph::complete(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(bm_canonical_complete)->Arg(12)->Arg(32);

void bm_contractibility_sweep(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::vector<Graph> graphs = connected_graphs(n);
    for (auto _ : state) {
        MemoCache cache;
        Policy policy;
        std::uint64_t positive = 0;
        for (const Graph& g : graphs)
            if (is_contractible(g, policy, cache)) ++positive;
        benchmark::DoNotOptimize(positive);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(graphs.size()));
}
BENCHMARK(bm_contractibility_sweep)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void bm_betti(benchmark::State& state) {
    std::mt19937 rng(2);
    Graph g = state.range(0) == 0 ? octahedron() : random_graph(rng, 10, 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(betti_numbers(g, CoefficientField::gf2, false));
        benchmark::DoNotOptimize(betti_numbers(g, CoefficientField::rational, false));
    }
}
BENCHMARK(bm_betti)->Arg(0)->Arg(1);

void bm_graph6_roundtrip(benchmark::State& state) {
    std::mt19937 rng(3);
    std::vector<std::string> lines;
    for (int i = 0; i < 256; ++i) lines.push_back(encode_graph6(random_graph(rng, 12, 0.5)));
    std::size_t i = 0;
    for (auto _ : state) {
        const std::string& line = lines[i++ % lines.size()];
        benchmark::DoNotOptimize(encode_graph6(decode_graph6(line)));
    }
}
BENCHMARK(bm_graph6_roundtrip);

void bm_enumerate(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_connected(n));
}
BENCHMARK(bm_enumerate)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
