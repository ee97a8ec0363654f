#include <benchmark/benchmark.h>

#include <random>

#include "rlcut/kmeans.hpp"
#include "rlcut/objectives.hpp"
#include "rlcut/policy.hpp"
#include "rlcut/posenc.hpp"
#include "rlcut/selection.hpp"
#include "rlcut/synth.hpp"

using namespace rlcut;

namespace {

SbmGraph& sbm() {
    static SbmGraph g = [] {
        SbmSpec spec;
        spec.seed = 42;
        return sbm_generate(spec);
    }();
    return g;
}

InitialEmbeddings& emb() {
    static InitialEmbeddings e = [] {
        PosConfig pc;
        pc.seed = 42;
        return initial_embeddings(sbm().graph, nullptr, lipschitz_embed(sbm().graph, pc));
    }();
    return e;
}

void bench_rwr(benchmark::State& state) {
    const auto& g = sbm().graph;
    for (auto _ : state) benchmark::DoNotOptimize(rwr(g, 0, 0.85, state.range(0)));
}
BENCHMARK(bench_rwr)->Arg(10)->Arg(100);

void bench_lipschitz_embed(benchmark::State& state) {
    PosConfig pc;
    pc.seed = 7;
    for (auto _ : state) benchmark::DoNotOptimize(lipschitz_embed(sbm().graph, pc));
}
BENCHMARK(bench_lipschitz_embed)->Unit(benchmark::kMillisecond);

void bench_move_delta(benchmark::State& state) {
    const auto& g = sbm().graph;
    Partitioning p(g.num_nodes, 5, sbm().labels);
    ObjectiveTracker tracker(g, p, ObjectiveKind::NormalizedCut);
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> node(0, g.num_nodes - 1), part(0, 4);
    for (auto _ : state) benchmark::DoNotOptimize(tracker.delta(node(rng), part(rng)));
}
BENCHMARK(bench_move_delta);

void bench_node_scores(benchmark::State& state) {
    const auto& g = sbm().graph;
    Partitioning p(g.num_nodes, 5, sbm().labels);
    for (auto _ : state) benchmark::DoNotOptimize(node_scores(g, p));
}
BENCHMARK(bench_node_scores);

void bench_gnn_forward(benchmark::State& state) {
    auto params = PolicyParameters::glorot(emb().matrix.cols, 32, 9);
    for (auto _ : state) benchmark::DoNotOptimize(gnn_forward(sbm().graph, emb(), params));
}
BENCHMARK(bench_gnn_forward)->Unit(benchmark::kMillisecond);

void bench_log_prob_grad(benchmark::State& state) {
    const auto& g = sbm().graph;
    auto params = PolicyParameters::glorot(emb().matrix.cols, 32, 9);
    Partitioning p(g.num_nodes, 5, sbm().labels);
    Matrix h = gnn_forward(g, emb(), params);
    int v = 0;
    auto dist = partition_distribution(g, h, p, v, params);
    int target = dist.candidates.front();
    for (auto _ : state)
        benchmark::DoNotOptimize(log_prob_grad(g, emb(), p, v, target, params));
}
BENCHMARK(bench_log_prob_grad)->Unit(benchmark::kMillisecond);

void bench_warm_start(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(warm_start(sbm().graph, emb(), 5, 3));
}
BENCHMARK(bench_warm_start)->Unit(benchmark::kMillisecond);

}  // namespace
