#include <matchgraph/alternation.hh>
#include <matchgraph/c4.hh>
#include <matchgraph/chromatic.hh>
#include <matchgraph/enumerate.hh>
#include <matchgraph/hypergraph.hh>
#include <matchgraph/matching.hh>
#include <matchgraph/orderings.hh>
#include <matchgraph/turan.hh>

#include <benchmark/benchmark.h>

using namespace matchgraph;

static void chromatic_schrijver(benchmark::State & state)
{
    auto kg = matching_graph(make_cycle(static_cast<int>(state.range(0))), 3).graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(chromatic_number(kg).chi);
}
BENCHMARK(chromatic_schrijver)->Arg(7)->Arg(8)->Arg(9);

static void chromatic_kneser_k6(benchmark::State & state)
{
    auto kg = matching_graph(make_complete(6), 2).graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(chromatic_number(kg).chi);
}
BENCHMARK(chromatic_kneser_k6);

static void turan_complete_bipartite(benchmark::State & state)
{
    auto g = make_complete_bipartite(static_cast<int>(state.range(0)), 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(turan_matchings(g, 2).ex_value);
}
BENCHMARK(turan_complete_bipartite)->Arg(4)->Arg(5)->Arg(6);

static void alt_sigma_euler(benchmark::State & state)
{
    auto g = make_complete_bipartite(static_cast<int>(state.range(0)), 4);
    auto h = matching_hypergraph(g, 2);
    auto sigma = euler_ordering(g);
    for (auto _ : state)
        benchmark::DoNotOptimize(alt_sigma(h, sigma));
}
BENCHMARK(alt_sigma_euler)->Arg(4)->Arg(6);

static void ex_alt_euler(benchmark::State & state)
{
    auto g = make_complete_bipartite(static_cast<int>(state.range(0)), 4);
    auto sigma = euler_ordering(g);
    for (auto _ : state)
        benchmark::DoNotOptimize(ex_alt_sigma(g, 2, sigma));
}
BENCHMARK(ex_alt_euler)->Arg(4)->Arg(6);

static void euler_tour_complete(benchmark::State & state)
{
    MultiGraphView view(make_complete(static_cast<int>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(eulerian_tour(view, 0).size());
}
BENCHMARK(euler_tour_complete)->Arg(9)->Arg(21)->Arg(41);

static void blossom_petersen(benchmark::State & state)
{
    auto g = make_petersen();
    for (auto _ : state)
        benchmark::DoNotOptimize(max_matching(g).size());
}
BENCHMARK(blossom_petersen);

static void c4_search(benchmark::State & state)
{
    int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(c4_monogamous(n, n).nodes);
}
BENCHMARK(c4_search)->Arg(6)->Arg(8)->Arg(12);

static void enumerate_connected(benchmark::State & state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(connected_graphs(static_cast<int>(state.range(0))).size());
}
BENCHMARK(enumerate_connected)->Arg(6)->Arg(7);
BENCHMARK_MAIN();
