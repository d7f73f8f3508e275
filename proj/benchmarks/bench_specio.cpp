#include "gkt/hyperlpa.hpp"
#include "gkt/specio.hpp"

#include <benchmark/benchmark.h>

using namespace gkt;

namespace {

void bm_parse_monoid(benchmark::State& state) {
    std::string text = "monoid M over Z { gens: p, q; unit: p + q; rel: p = 2 p[1] + q[1]; "
                       "rel: q = p[1]; }";
    for (auto _ : state) {
        SpecDocument doc = parse(text);
        benchmark::DoNotOptimize(doc);
    }
}
BENCHMARK(bm_parse_monoid);

void bm_print_parse_hypergraph(benchmark::State& state) {
    Graph g;
    g.vertices = {"a", "b", "c"};
    g.edges = {{"e0", "a", "b"}, {"e1", "b", "c"}, {"e2", "c", "a"}, {"e3", "a", "a"}};
    auto [h, w] = graph_to_hypergraph(g);
    SpecDocument doc{HypergraphDoc{h, w}};
    for (auto _ : state) {
        SpecDocument round = parse(print(doc));
        benchmark::DoNotOptimize(round);
    }
}
BENCHMARK(bm_print_parse_hypergraph);

} // namespace
