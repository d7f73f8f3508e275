#include "gkt/bergman.hpp"
#include "gkt/hyperlpa.hpp"
#include "gkt/linalg.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace gkt;

namespace {

const GradeGroup Z = GradeGroup::integers();

// Conjugates a 0/1 diagonal by random elementary matrices E = I + c e_ij,
// whose inverses are I - c e_ij; the result is an exact dense idempotent.
ShiftedIdempotent dense_idempotent(std::size_t n) {
    SemisimpleRing r{{"s", "t"}, Field::rationals()};
    std::mt19937_64 rng(17);
    Mat e = m_zero(r, n, n);
    for (std::size_t i = 0; i < n; ++i)
        if (i % 2 == 0) e.at(i, i) = r_one(r);
    for (int step = 0; step < 3 * (int)n; ++step) {
        std::size_t i = rng() % n, j = rng() % n;
        if (i == j) continue;
        std::int64_t c = (std::int64_t)(rng() % 3) - 1;
        Mat el = m_identity(r, n), elinv = m_identity(r, n);
        for (std::size_t comp = 0; comp < 2; ++comp) {
            el.at(i, j).comps[comp] = c;
            elinv.at(i, j).comps[comp] = -c;
        }
        e = m_mul(r, m_mul(r, el, e), elinv);
    }
    return {r, std::vector<GradeElement>(n, g_zero(Z)), e};
}

void bm_diagonalize(benchmark::State& state) {
    ShiftedIdempotent e = dense_idempotent((std::size_t)state.range(0));
    for (auto _ : state) {
        DiagonalizeResult d = diagonalize(Z, e);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(bm_diagonalize)->Arg(4)->Arg(8);

void bm_bergman_level4(benchmark::State& state) {
    Hypergraph h;
    h.vertices = {"u", "v"};
    h.hyperedges.push_back({"h0", {"u", "v"}, {"u", "u", "v"}});
    WeightMap w;
    w.group = Z;
    w.weights["h0"] = {{g_zero(Z), g_int(Z, 1)},
                       {g_int(Z, 1), g_int(Z, 2), g_int(Z, 1)}};
    BergmanData data = hypergraph_to_bergman(h, w, Field::rationals());
    for (auto _ : state) {
        AlgebraPresentation p = bergman_presentation(data, 4);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(bm_bergman_level4);

} // namespace
