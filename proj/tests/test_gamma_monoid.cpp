#include "gkt/decide.hpp"
#include "gkt/mword.hpp"

#include <doctest.h>

#include <deque>
#include <random>
#include <set>

using namespace gkt;

namespace {

const GradeGroup Z = GradeGroup::integers();
const GradeGroup T0 = GradeGroup::trivial();

MWord zw(const char* gen, std::int64_t mult = 1) { return word_of(gen, g_zero(T0), mult); }

MWord iw(std::initializer_list<std::tuple<const char*, std::int64_t, std::int64_t>> terms) {
    MWord w;
    for (const auto& [g, s, m] : terms) w = word_add(w, word_of(g, g_int(Z, s), m));
    return w;
}

// <x | x = 3x> over the trivial group.
MonoidPresentation x_eq_3x() {
    return make_presentation(T0, {"x"}, {{zw("x"), zw("x", 3)}});
}

MonoidPresentation free_pres(std::vector<std::string> gens, GradeGroup g = T0) {
    return make_presentation(std::move(g), std::move(gens), {});
}

// T_{rose_n}: <v | v(0) = n v(1)> with unit v(0).
MonoidPresentation rose_talented(std::int64_t n) {
    return make_presentation(Z, {"v"}, {{iw({{"v", 0, 1}}), iw({{"v", 1, n}})}},
                             iw({{"v", 0, 1}}));
}

// Independent bounded-closure oracle: plain one-sided BFS over single-relation
// rewrites with every admissible shift, words capped by length, shifts by a
// box around the start word. Written before the engines it checks.
std::set<std::string> oracle_class(const MonoidPresentation& p, const MWord& start,
                                   std::int64_t len_cap, std::int64_t window) {
    std::vector<GradeElement> deltas;
    if (p.group.is_trivial()) {
        deltas.push_back(g_zero(p.group));
    } else {
        for (std::int64_t k = -window; k <= window; ++k) deltas.push_back(g_int(p.group, k));
    }
    auto key = [&](const MWord& w) { return format_word(p.group, w); };
    std::set<std::string> seen{key(start)};
    std::deque<MWord> q{start};
    while (!q.empty()) {
        MWord w = q.front();
        q.pop_front();
        for (const auto& r : p.relations)
            for (const auto& d : deltas)
                for (bool fwd : {true, false}) {
                    MWord from = word_shift(p.group, fwd ? r.lhs : r.rhs, d);
                    MWord to = word_shift(p.group, fwd ? r.rhs : r.lhs, d);
                    if (!word_contains(w, from)) continue;
                    MWord next = word_add(word_minus(w, from), to);
                    if (word_len(next) > len_cap) continue;
                    bool in_window = true;
                    for (const auto& [k, n] : next.terms)
                        for (auto c : k.shift.free)
                            if (c < -window || c > window) in_window = false;
                    if (!in_window) continue;
                    if (seen.insert(key(next)).second) q.push_back(next);
                }
    }
    return seen;
}

bool oracle_equal(const MonoidPresentation& p, const MWord& a, const MWord& b,
                  std::int64_t len_cap = 24, std::int64_t window = 6) {
    auto ca = oracle_class(p, a, len_cap, window);
    return ca.count(format_word(p.group, b)) > 0;
}

} // namespace

TEST_CASE("word_add basics") {
    CHECK(word_add(iw({{"p", 0, 1}}), iw({{"p", 0, 1}})) == iw({{"p", 0, 2}}));
    MWord w = iw({{"p", 1, 2}, {"q", 0, 1}});
    CHECK(word_add(MWord{}, w) == w);
    CHECK(word_add(w, iw({{"q", 0, 1}})) == iw({{"p", 1, 2}, {"q", 0, 2}}));
}

TEST_CASE("word_shift basics") {
    CHECK(word_shift(Z, iw({{"p", 0, 1}}), g_int(Z, 1)) == iw({{"p", 1, 1}}));
    MWord w = iw({{"p", 2, 3}, {"q", -1, 1}});
    CHECK(word_shift(Z, w, g_zero(Z)) == w);
    CHECK(word_shift(Z, word_shift(Z, w, g_int(Z, 2)), g_int(Z, -2)) == w);
}

TEST_CASE("word_add is associative and commutative with neutral zero") {
    std::mt19937_64 rng(7);
    auto rand_word = [&] {
        MWord w;
        const char* gens[] = {"a", "b", "c"};
        int terms = (int)(rng() % 4);
        for (int i = 0; i < terms; ++i)
            w = word_add(w, word_of(gens[rng() % 3], g_int(Z, (std::int64_t)(rng() % 5) - 2),
                                    1 + (std::int64_t)(rng() % 3)));
        return w;
    };
    for (int i = 0; i < 200; ++i) {
        MWord a = rand_word(), b = rand_word(), c = rand_word();
        CHECK(word_add(a, b) == word_add(b, a));
        CHECK(word_add(word_add(a, b), c) == word_add(a, word_add(b, c)));
        CHECK(word_add(a, MWord{}) == a);
    }
}

TEST_CASE("word_shift is a monoid automorphism") {
    std::mt19937_64 rng(11);
    auto rand_word = [&] {
        MWord w;
        const char* gens[] = {"a", "b"};
        int terms = 1 + (int)(rng() % 3);
        for (int i = 0; i < terms; ++i)
            w = word_add(w, word_of(gens[rng() % 2], g_int(Z, (std::int64_t)(rng() % 7) - 3)));
        return w;
    };
    for (int i = 0; i < 200; ++i) {
        MWord a = rand_word(), b = rand_word();
        GradeElement d = g_int(Z, (std::int64_t)(rng() % 9) - 4);
        GradeElement e = g_int(Z, (std::int64_t)(rng() % 9) - 4);
        CHECK(word_shift(Z, word_add(a, b), d) ==
              word_add(word_shift(Z, a, d), word_shift(Z, b, d)));
        CHECK(word_shift(Z, word_shift(Z, a, d), e) == word_shift(Z, a, g_add(Z, d, e)));
    }
}

TEST_CASE("closure_decide on <x | x = 3x>") {
    MonoidPresentation p = x_eq_3x();
    Budget budget;
    CHECK(closure_decide(p, zw("x"), zw("x", 3), budget).verdict == Verdict::Equal);
    // Oracle first: one rewrite plus additivity connects 2x and 4x.
    CHECK(oracle_equal(p, zw("x", 2), zw("x", 4)));
    CHECK(closure_decide(p, zw("x", 2), zw("x", 4), budget).verdict == Verdict::Equal);
}

TEST_CASE("closure_decide distinguishes free generators") {
    MonoidPresentation p = free_pres({"p", "q"});
    Decision d = closure_decide(p, zw("p"), zw("q"), Budget{});
    CHECK(d.verdict == Verdict::NotEqual);
}

TEST_CASE("closure_decide is reflexive and symmetric") {
    MonoidPresentation p = x_eq_3x();
    Budget budget;
    Decision refl = closure_decide(p, zw("x", 2), zw("x", 2), budget);
    CHECK(refl.verdict == Verdict::Equal);
    CHECK(refl.states_explored == 0);
    for (auto [a, b] : {std::pair{zw("x"), zw("x", 2)}, {zw("x", 2), zw("x", 4)}}) {
        Decision ab = closure_decide(p, a, b, budget);
        Decision ba = closure_decide(p, b, a, budget);
        CHECK(ab.verdict == ba.verdict);
    }
}

TEST_CASE("closure_decide rejects undeclared generators") {
    MonoidPresentation p = x_eq_3x();
    CHECK_THROWS_AS(closure_decide(p, zw("y"), zw("x"), Budget{}), spec_error);
}

TEST_CASE("graph_decide on rose talented monoids") {
    MonoidPresentation t2 = rose_talented(2);
    CHECK(graph_decide(t2, iw({{"v", 0, 1}}), iw({{"v", 1, 2}}), 16).verdict == Verdict::Equal);
    CHECK(graph_decide(t2, iw({{"v", 0, 1}}), iw({{"v", 2, 4}}), 16).verdict == Verdict::Equal);
    CHECK(graph_decide(t2, iw({{"v", 0, 1}}), iw({{"v", 1, 3}}), 16).verdict ==
          Verdict::NotEqual);
}

TEST_CASE("graph_decide validates the shape") {
    // No side is a single generator occurrence.
    MonoidPresentation p =
        make_presentation(Z, {"a", "b"}, {{iw({{"a", 0, 2}}), iw({{"b", 0, 3}})}});
    CHECK(!is_graph_shaped(p));
    CHECK_THROWS_AS(graph_decide(p, iw({{"a", 0, 1}}), iw({{"b", 0, 1}}), 4), spec_error);
    // Two relations forced onto the same generator.
    MonoidPresentation q = make_presentation(
        Z, {"a", "b"},
        {{iw({{"a", 0, 1}}), iw({{"b", 0, 2}})}, {iw({{"a", 0, 1}}), iw({{"b", 1, 2}})}});
    CHECK(!is_graph_shaped(q));
    // A relation between two singletons can take either orientation.
    MonoidPresentation r = make_presentation(
        Z, {"a", "b"},
        {{iw({{"b", 0, 1}}), iw({{"a", 0, 1}})}, {iw({{"b", 0, 1}}), iw({{"a", 1, 2}})}});
    CHECK(is_graph_shaped(r));
    CHECK(is_graph_shaped(rose_talented(2)));
}

TEST_CASE("graph_decide handles the two-cycle") {
    // v = w(1), w = v(1): v(0) ~ v(2) but v(0) !~ v(1).
    MonoidPresentation p = make_presentation(
        Z, {"v", "w"},
        {{iw({{"v", 0, 1}}), iw({{"w", 1, 1}})}, {iw({{"w", 0, 1}}), iw({{"v", 1, 1}})}});
    CHECK(graph_decide(p, iw({{"v", 0, 1}}), iw({{"v", 2, 1}}), 8).verdict == Verdict::Equal);
    CHECK(graph_decide(p, iw({{"v", 0, 1}}), iw({{"w", 1, 1}}), 8).verdict == Verdict::Equal);
    CHECK(graph_decide(p, iw({{"v", 0, 1}}), iw({{"v", 1, 1}}), 8).verdict == Verdict::NotEqual);
}

TEST_CASE("graph_decide with sinks freezes sink multiplicities") {
    // v = w(1) + s(1), w = v(1); s is a sink.
    MonoidPresentation p = make_presentation(
        Z, {"s", "v", "w"},
        {{iw({{"v", 0, 1}}), iw({{"w", 1, 1}, {"s", 1, 1}})},
         {iw({{"w", 0, 1}}), iw({{"v", 1, 1}})}});
    CHECK(graph_decide(p, iw({{"v", 0, 1}}), iw({{"w", 1, 1}, {"s", 1, 1}}), 8).verdict ==
          Verdict::Equal);
    CHECK(graph_decide(p, iw({{"v", 0, 1}}), iw({{"w", 1, 1}}), 8).verdict == Verdict::NotEqual);
    CHECK(graph_decide(p, iw({{"s", 0, 1}}), iw({{"s", 1, 1}}), 8).verdict == Verdict::NotEqual);
}

TEST_CASE("leq_decide examples") {
    MonoidPresentation t2 = rose_talented(2);
    Budget budget;
    CHECK(leq_decide(t2, iw({{"v", 1, 1}}), iw({{"v", 0, 1}}), budget).verdict == Verdict::Equal);
    CHECK(leq_decide(t2, MWord{}, iw({{"v", 0, 1}}), budget).verdict == Verdict::Equal);
    MonoidPresentation f = free_pres({"p", "q"});
    CHECK(leq_decide(f, zw("p"), zw("q"), budget).verdict == Verdict::NotEqual);
}

TEST_CASE("leq both ways is consistent with closure equality on cancellative fixtures") {
    MonoidPresentation t2 = rose_talented(2);
    Budget budget;
    budget.max_len = 16;
    budget.shift_window = 4;
    budget.max_states = 20000;
    std::vector<MWord> words{iw({{"v", 0, 1}}), iw({{"v", 1, 2}}), iw({{"v", 1, 1}}),
                             iw({{"v", 0, 2}}), iw({{"v", 2, 4}}), iw({{"v", 1, 3}})};
    for (const auto& a : words)
        for (const auto& b : words) {
            Decision ab = leq_decide(t2, a, b, budget);
            Decision ba = leq_decide(t2, b, a, budget);
            if (ab.verdict == Verdict::Equal && ba.verdict == Verdict::Equal) {
                Decision eq = graph_decide(t2, a, b, 16);
                CHECK(eq.verdict == Verdict::Equal);
            }
        }
}

TEST_CASE("order_unit_check examples") {
    MonoidPresentation t2 = rose_talented(2);
    Budget budget;
    MWord unit = iw({{"v", 0, 1}});
    auto ds = order_unit_check(t2, unit, {iw({{"v", 1, 1}}), MWord{}}, budget);
    CHECK(ds[0].verdict == Verdict::Equal);
    CHECK(ds[1].verdict == Verdict::Equal);
    MonoidPresentation f = free_pres({"p", "q"});
    auto dq = order_unit_check(f, zw("p"), {zw("q")}, budget);
    CHECK(dq[0].verdict == Verdict::NotEqual);
    CHECK_THROWS_AS(order_unit_check(f, zw("p"), {}, budget), spec_error);
}

TEST_CASE("strong_order_unit_check examples") {
    MonoidPresentation t2 = rose_talented(2);
    Budget budget;
    MWord unit = iw({{"v", 0, 1}});
    auto ds = strong_order_unit_check(t2, unit, {iw({{"v", 1, 1}}), iw({{"v", -1, 1}}), unit},
                                      budget);
    CHECK(ds[0].verdict == Verdict::Equal);
    CHECK(ds[1].verdict == Verdict::Equal);
    CHECK(ds[2].verdict == Verdict::Equal);

    MonoidPresentation lone = make_presentation(Z, {"v"}, {});
    auto dl = strong_order_unit_check(lone, iw({{"v", 0, 1}}), {iw({{"v", 1, 1}})}, budget);
    CHECK(dl[0].verdict == Verdict::NotEqual);
}

TEST_CASE("strong order unit implies order unit") {
    MonoidPresentation t2 = rose_talented(2);
    Budget budget;
    budget.max_len = 24;
    budget.shift_window = 4;
    MWord unit = iw({{"v", 0, 1}});
    std::vector<MWord> probes{iw({{"v", 1, 1}}), iw({{"v", -1, 1}}), iw({{"v", 0, 2}}),
                              iw({{"v", 2, 3}})};
    auto strong = strong_order_unit_check(t2, unit, probes, budget);
    auto plain = order_unit_check(t2, unit, probes, budget);
    for (std::size_t i = 0; i < probes.size(); ++i)
        if (strong[i].verdict == Verdict::Equal) CHECK(plain[i].verdict == Verdict::Equal);
}

TEST_CASE("invariant_order_unit_check examples") {
    Budget budget;
    MonoidPresentation triv = free_pres({"p"});
    CHECK(invariant_order_unit_check(triv, zw("p"), budget).verdict == Verdict::Equal);

    MonoidPresentation fz = free_pres({"p"}, Z);
    CHECK(invariant_order_unit_check(fz, iw({{"p", 0, 1}}), budget).verdict == Verdict::NotEqual);

    MonoidPresentation inv = make_presentation(
        Z, {"p"}, {{iw({{"p", 0, 1}}), iw({{"p", 1, 1}})}});
    CHECK(invariant_order_unit_check(inv, iw({{"p", 0, 1}}), budget).verdict == Verdict::Equal);
}

TEST_CASE("quotient_presentation") {
    MonoidPresentation f = free_pres({"p"}, Z);
    MonoidPresentation q = quotient_presentation(f, {{iw({{"p", 0, 1}}), iw({{"p", 1, 2}})}});
    CHECK(q.relations.size() == 1);
    CHECK(presentation_equal(
        q, make_presentation(Z, {"p"}, {{iw({{"p", 0, 1}}), iw({{"p", 1, 2}})}})));
    CHECK(presentation_equal(quotient_presentation(f, {}), f));
    MonoidPresentation pq = free_pres({"p", "q"});
    MonoidPresentation pq2 = quotient_presentation(pq, {{zw("p"), zw("q")}});
    CHECK(pq2.relations.size() == 1);
    CHECK_THROWS_AS(quotient_presentation(f, {{iw({{"z", 0, 1}}), iw({{"p", 0, 1}})}}),
                    spec_error);
}

namespace {

// Random graph-shaped presentation over <= 4 generators; some generators are
// sinks, rule targets sit at shift +1 (talented shape) or mixed shifts.
MonoidPresentation random_graph_pres(std::mt19937_64& rng, bool uniform) {
    const std::vector<std::string> pool{"a", "b", "c", "d"};
    int ngen = 2 + (int)(rng() % 3);
    std::vector<std::string> gens(pool.begin(), pool.begin() + ngen);
    std::vector<MRelation> rels;
    for (int i = 0; i < ngen; ++i) {
        if (rng() % 3 == 0) continue; // sink
        MWord rhs;
        int support = 1 + (int)(rng() % 2);
        for (int s = 0; s < support; ++s) {
            std::int64_t shift = uniform ? 1 : (std::int64_t)(rng() % 3);
            rhs = word_add(rhs, word_of(gens[rng() % ngen], g_int(Z, shift)));
        }
        rels.push_back({word_of(gens[i], g_zero(Z)), rhs});
    }
    return make_presentation(Z, gens, rels);
}

MWord random_word(std::mt19937_64& rng, const MonoidPresentation& p, std::int64_t max_len) {
    MWord w;
    std::int64_t len = 1 + (std::int64_t)(rng() % max_len);
    for (std::int64_t i = 0; i < len; ++i)
        w = word_add(w, word_of(p.generators[rng() % p.generators.size()],
                                g_int(Z, (std::int64_t)(rng() % 3))));
    return w;
}

} // namespace

TEST_CASE("cross-engine agreement on random graph-shaped presentations") {
    std::mt19937_64 rng(2024);
    Budget budget;
    budget.max_states = 30000;
    budget.max_len = 128; // depth-4 expansions of length-6 words stay inside
    int compared = 0, equal_checked = 0;
    for (int iter = 0; iter < 60; ++iter) {
        MonoidPresentation p = random_graph_pres(rng, iter % 2 == 0);
        MWord a = random_word(rng, p, 6);
        MWord b = random_word(rng, p, 6);
        if (iter % 2 == 1 && !p.relations.empty()) {
            // Apply a few forward rewrites to a, producing an equal word.
            b = a;
            for (int step = 0; step < 3; ++step)
                for (const auto& r : p.relations) {
                    MWord lhs = r.lhs.terms.size() == 1 ? r.lhs : r.rhs;
                    MWord rhs = r.lhs.terms.size() == 1 ? r.rhs : r.lhs;
                    if (lhs.terms.size() == 1 && word_contains(b, lhs)) {
                        b = word_add(word_minus(b, lhs), rhs);
                        break;
                    }
                }
        }
        Decision dg = graph_decide(p, a, b, 4);
        Decision dc = closure_decide(p, a, b, budget);
        if (dg.definitive() && dc.definitive()) {
            ++compared;
            CHECK(dg.verdict == dc.verdict);
        }
        // Soundness: a graph-engine Equal is never contradicted by closure,
        // and is reproduced whenever the closure search completes.
        if (dg.verdict == Verdict::Equal) {
            ++equal_checked;
            CHECK(dc.verdict != Verdict::NotEqual);
        }
    }
    CHECK(compared > 20);
    CHECK(equal_checked > 5);
}

TEST_CASE("closure_decide over a torsion grade group") {
    GradeGroup g{0, {2}}; // Z/2
    GradeElement one = g_zero(g);
    one.residues[0] = 1;
    // <p | p = p(1)> over Z/2: the two shifted copies collapse.
    MonoidPresentation p = make_presentation(
        g, {"p"}, {{word_of("p", g_zero(g)), word_of("p", one)}});
    Budget budget;
    CHECK(closure_decide(p, word_of("p", g_zero(g)), word_of("p", one), budget).verdict ==
          Verdict::Equal);
    MonoidPresentation free_p = make_presentation(g, {"p"}, {});
    CHECK(closure_decide(free_p, word_of("p", g_zero(g)), word_of("p", one), budget).verdict ==
          Verdict::NotEqual);
    CHECK(invariant_order_unit_check(p, word_of("p", g_zero(g)), budget).verdict ==
          Verdict::Equal);
}

TEST_CASE("decisions carry budget diagnostics") {
    MonoidPresentation p = x_eq_3x();
    Budget tiny;
    tiny.max_states = 2;
    Decision d = closure_decide(p, zw("x", 2), zw("x", 5), tiny);
    CHECK(d.verdict == Verdict::Unknown);
    CHECK(d.states_explored >= 2);
}
