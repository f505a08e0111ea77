#include <benchmark/benchmark.h>

#include <netctrl/controllability.hpp>
#include <netctrl/designer.hpp>
#include <netctrl/destructive.hpp>
#include <netctrl/graph.hpp>
#include <netctrl/verifier.hpp>

using namespace netctrl;

namespace {

Graph twin_hub_5() {
    return graph_from_edges(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

Graph sample_graph(int n, uint64_t seed) {
    Rng rng(seed);
    return random_connected_graph(n, rng);
}

} // namespace

static void BM_EnumerateConnected5(benchmark::State& state) {
    for (auto _ : state) {
        long long c = count_connected_graphs(5);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_EnumerateConnected5);

static void BM_CanonicalForm5(benchmark::State& state) {
    Graph g = twin_hub_5();
    for (auto _ : state) {
        auto code = canonical_form(g, 0);
        benchmark::DoNotOptimize(code);
    }
}
BENCHMARK(BM_CanonicalForm5);

static void BM_KalmanRank(benchmark::State& state) {
    Graph g = sample_graph(static_cast<int>(state.range(0)), 11);
    std::vector<int> leaders = {0};
    for (auto _ : state) {
        bool ok = kalman_controllable(follower_partition(g, leaders));
        benchmark::DoNotOptimize(ok);
    }
}
BENCHMARK(BM_KalmanRank)->Arg(8)->Arg(12)->Arg(16);

static void BM_ControllabilityReport(benchmark::State& state) {
    Graph g = sample_graph(static_cast<int>(state.range(0)), 11);
    std::vector<int> leaders = {0};
    for (auto _ : state) {
        ControllabilityReport r = controllability_report(g, leaders);
        benchmark::DoNotOptimize(r.kalmanControllable);
    }
}
BENCHMARK(BM_ControllabilityReport)->Arg(8)->Arg(12);

static void BM_EigenspaceDecomposition(benchmark::State& state) {
    Graph g = sample_graph(static_cast<int>(state.range(0)), 23);
    for (auto _ : state) {
        LaplacianEigenspaces eig(g);
        benchmark::DoNotOptimize(eig.factors().size());
    }
}
BENCHMARK(BM_EigenspaceDecomposition)->Arg(5)->Arg(7);

static void BM_DeriveQcdCatalog(benchmark::State& state) {
    for (auto _ : state) {
        QcdCatalog c = derive_qcd_catalog();
        benchmark::DoNotOptimize(c.entries.size());
    }
}
BENCHMARK(BM_DeriveQcdCatalog);

static void BM_QcdQuads5(benchmark::State& state) {
    QcdCatalog catalog = derive_qcd_catalog();
    Graph g = twin_hub_5();
    for (auto _ : state) {
        auto quads = qcd_quads_5(g, catalog);
        benchmark::DoNotOptimize(quads.size());
    }
}
BENCHMARK(BM_QcdQuads5);

static void BM_DetectAllPairsTriples(benchmark::State& state) {
    Graph g = sample_graph(static_cast<int>(state.range(0)), 37);
    for (auto _ : state) {
        auto pairs = all_dcd_pairs(g);
        auto triples = all_tcd_triples(g);
        benchmark::DoNotOptimize(pairs.size() + triples.size());
    }
}
BENCHMARK(BM_DetectAllPairsTriples)->Arg(8)->Arg(16)->Arg(32);

static void BM_RandomDesign(benchmark::State& state) {
    uint64_t seed = 1;
    for (auto _ : state) {
        DesignOutput out = build_design(random_design(static_cast<int>(state.range(0)), seed++));
        benchmark::DoNotOptimize(out.eigenvalue);
    }
}
BENCHMARK(BM_RandomDesign)->Arg(9)->Arg(12);

static void BM_VerifyPairSuite4(benchmark::State& state) {
    for (auto _ : state) {
        VerificationRun run = verify_t1(4);
        benchmark::DoNotOptimize(run.instanceCount);
    }
}
BENCHMARK(BM_VerifyPairSuite4);

BENCHMARK_MAIN();
