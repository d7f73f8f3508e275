#include "gkt/decide.hpp"
#include "gkt/hyperlpa.hpp"
#include "gkt/vmonoid.hpp"

#include <benchmark/benchmark.h>

using namespace gkt;

namespace {

const GradeGroup Z = GradeGroup::integers();

Graph rose(int n) {
    Graph g;
    g.vertices = {"v"};
    for (int i = 1; i <= n; ++i) g.edges.push_back({"e" + std::to_string(i), "v", "v"});
    return g;
}

void bm_closure_leavitt_monoid(benchmark::State& state) {
    GradeGroup t0 = GradeGroup::trivial();
    MonoidPresentation m = make_presentation(
        t0, {"x"}, {{word_of("x", g_zero(t0), 2), word_of("x", g_zero(t0), 5)}});
    Budget budget;
    for (auto _ : state) {
        Decision d = closure_decide(m, word_of("x", g_zero(t0), 3), word_of("x", g_zero(t0), 6),
                                    budget);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(bm_closure_leavitt_monoid);

void bm_graph_decide_rose3(benchmark::State& state) {
    MonoidPresentation t = talented_presentation(rose(3));
    MWord a = word_of("v", g_zero(Z));
    MWord b = word_of("v", g_int(Z, 5), 243);
    for (auto _ : state) {
        Decision d = graph_decide(t, a, b, 16);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(bm_graph_decide_rose3);

void bm_hom_search_absent(benchmark::State& state) {
    Graph e = rose(4), f = rose(2);
    HomBounds bounds{3, 1, 2};
    for (auto _ : state) {
        auto cert = hom_search(e, f, bounds, true);
        benchmark::DoNotOptimize(cert);
    }
}
BENCHMARK(bm_hom_search_absent);

} // namespace
