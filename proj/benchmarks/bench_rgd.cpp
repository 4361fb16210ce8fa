#include <benchmark/benchmark.h>

#include "rgd/design.hpp"
#include "rgd/develop.hpp"
#include "rgd/graph.hpp"
#include "rgd/search.hpp"

using namespace rgd;

static void BM_CandidateEnumeration(benchmark::State& state) {
    Graph g = sylvester();
    for (auto _ : state) {
        auto cs = candidate_blocks(g);
        benchmark::DoNotOptimize(cs.candidates.size());
    }
}
BENCHMARK(BM_CandidateEnumeration);

static void BM_CoverDecide(benchmark::State& state) {
    Graph g = sylvester();
    for (auto _ : state) {
        auto out = exact_cover(g, CoverMode::decide);
        benchmark::DoNotOptimize(out.nodes);
    }
}
BENCHMARK(BM_CoverDecide);

static void BM_CoverCount(benchmark::State& state) {
    Graph g = sylvester();
    for (auto _ : state) {
        auto out = exact_cover(g, CoverMode::count);
        benchmark::DoNotOptimize(out.count);
    }
}
BENCHMARK(BM_CoverCount);

static void BM_DevelopLargestTable(benchmark::State& state) {
    auto bbs = builtin_table(202, TableFamily::delta3);
    for (auto _ : state) {
        Design d = develop(bbs);
        benchmark::DoNotOptimize(d.blocks.size());
    }
}
BENCHMARK(BM_DevelopLargestTable);

static void BM_VerifyLargestTable(benchmark::State& state) {
    Design d = develop(builtin_table(202, TableFamily::delta3));
    Graph g = recover_graph(d);
    for (auto _ : state) {
        auto report = verify(d, g);
        benchmark::DoNotOptimize(report.ok());
    }
}
BENCHMARK(BM_VerifyLargestTable);

static void BM_RecoverGraph(benchmark::State& state) {
    Design d = develop(builtin_table(202, TableFamily::delta3));
    for (auto _ : state) {
        Graph g = recover_graph(d);
        benchmark::DoNotOptimize(g.order());
    }
}
BENCHMARK(BM_RecoverGraph);

static void BM_Girth(benchmark::State& state) {
    Graph g = recover_graph(develop(builtin_table(202, TableFamily::delta3)));
    for (auto _ : state) {
        auto value = girth(g);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_Girth);

static void BM_PartitionRefutation(benchmark::State& state) {
    Graph g = random_regular_girth5(22, 3, 9);  // the slowest recorded seed
    for (auto _ : state) {
        auto out = algorithm_d(g);
        benchmark::DoNotOptimize(out.nodes);
    }
}
BENCHMARK(BM_PartitionRefutation);

static void BM_RandomGraph(benchmark::State& state) {
    std::uint64_t seed = 1;
    for (auto _ : state) {
        Graph g = random_regular_girth5(25, 4, seed++);
        benchmark::DoNotOptimize(g.order());
    }
}
BENCHMARK(BM_RandomGraph);

BENCHMARK_MAIN();
