#include "gkt/hyperlpa.hpp"

#include <algorithm>

namespace gkt {

std::string hyper_sym(const std::string& hedge, std::size_t i, std::size_t j) {
    return hedge + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::string hyper_sym_star(const std::string& hedge, std::size_t i, std::size_t j) {
    return hyper_sym(hedge, i, j) + "*";
}

namespace {

// uv = delta_uv u for all ordered pairs, plus sum of vertices = 1.
void vertex_block(const std::vector<std::string>& vertices, const GradeGroup& g, const Field& f,
                  std::vector<AGen>& gens, std::vector<ARelation>& rels) {
    for (const auto& v : vertices) gens.push_back({v, g_zero(g)});
    for (const auto& u : vertices)
        for (const auto& v : vertices) {
            std::vector<ATerm> terms{{Rational(1), {u, v}}};
            if (u == v) terms.push_back({f.neg(Rational(1)), {u}});
            rels.push_back(make_relation(f, std::move(terms)));
        }
    std::vector<ATerm> sum;
    for (const auto& v : vertices) sum.push_back({Rational(1), {v}});
    sum.push_back({f.neg(Rational(1)), {}});
    rels.push_back(make_relation(f, std::move(sum)));
}

} // namespace

AlgebraPresentation hyper_lpa_presentation(const Hypergraph& h, const WeightMap& w,
                                           const Field& field) {
    validate_weights(h, w);
    std::vector<AGen> gens;
    std::vector<ARelation> rels;
    vertex_block(h.vertices, w.group, field, gens, rels);

    for (const auto& he : h.hyperedges) {
        const HedgeWeights& hw = w.weights.at(he.name);
        const std::size_t m = he.sources.size(), n = he.ranges.size();
        auto sym = [&](std::size_t i, std::size_t j) { return hyper_sym(he.name, i + 1, j + 1); };
        auto sym_star = [&](std::size_t i, std::size_t j) {
            return hyper_sym_star(he.name, i + 1, j + 1);
        };
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                GradeElement deg = weight_of(w.group, hw, i, j);
                gens.push_back({sym(i, j), deg});
                gens.push_back({sym_star(i, j), g_neg(w.group, deg)});
            }
        // s_i h_ij r_j = h_ij and r_j h*_ij s_i = h*_ij
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                rels.push_back(relation_eq(field,
                                           {{Rational(1), {he.sources[i], sym(i, j), he.ranges[j]}}},
                                           {{Rational(1), {sym(i, j)}}}));
                rels.push_back(
                    relation_eq(field,
                                {{Rational(1), {he.ranges[j], sym_star(i, j), he.sources[i]}}},
                                {{Rational(1), {sym_star(i, j)}}}));
            }
        // sum_j h_ij h*_{i'j} = delta_{ii'} s_i
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t i2 = 0; i2 < m; ++i2) {
                std::vector<ATerm> lhs;
                for (std::size_t j = 0; j < n; ++j)
                    lhs.push_back({Rational(1), {sym(i, j), sym_star(i2, j)}});
                std::vector<ATerm> rhs;
                if (i == i2) rhs.push_back({Rational(1), {he.sources[i]}});
                rels.push_back(relation_eq(field, std::move(lhs), std::move(rhs)));
            }
        // sum_i h*_ij h_ij' = delta_{jj'} r_j
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t j2 = 0; j2 < n; ++j2) {
                std::vector<ATerm> lhs;
                for (std::size_t i = 0; i < m; ++i)
                    lhs.push_back({Rational(1), {sym_star(i, j), sym(i, j2)}});
                std::vector<ATerm> rhs;
                if (j == j2) rhs.push_back({Rational(1), {he.ranges[j]}});
                rels.push_back(relation_eq(field, std::move(lhs), std::move(rhs)));
            }
    }
    return make_algebra_presentation(w.group, field, std::move(gens), std::move(rels), true);
}

AlgebraPresentation path_algebra_presentation(const Graph& e, const Field& field) {
    e.validate();
    GradeGroup z = GradeGroup::integers();
    std::vector<AGen> gens;
    std::vector<ARelation> rels;
    vertex_block(e.vertices, z, field, gens, rels);
    for (const auto& ed : e.edges) {
        gens.push_back({ed.name, g_int(z, 1)});
        rels.push_back(relation_eq(field, {{Rational(1), {ed.src, ed.name}}},
                                   {{Rational(1), {ed.name}}}));
        rels.push_back(relation_eq(field, {{Rational(1), {ed.name, ed.dst}}},
                                   {{Rational(1), {ed.name}}}));
    }
    return make_algebra_presentation(z, field, std::move(gens), std::move(rels), true);
}

AlgebraPresentation lpa_presentation(const Graph& e, const Field& field) {
    e.validate();
    GradeGroup z = GradeGroup::integers();
    std::vector<AGen> gens;
    std::vector<ARelation> rels;
    vertex_block(e.vertices, z, field, gens, rels);
    for (const auto& ed : e.edges) {
        gens.push_back({ed.name, g_int(z, 1)});
        gens.push_back({ed.name + "*", g_int(z, -1)});
        rels.push_back(relation_eq(field, {{Rational(1), {ed.src, ed.name, ed.dst}}},
                                   {{Rational(1), {ed.name}}}));
        rels.push_back(relation_eq(field, {{Rational(1), {ed.dst, ed.name + "*", ed.src}}},
                                   {{Rational(1), {ed.name + "*"}}}));
    }
    for (const auto& v : e.regular_vertices()) {
        auto out = e.out_edges(v);
        // sum_e e e* = v over s^{-1}(v)
        std::vector<ATerm> lhs;
        for (const Edge* ed : out) lhs.push_back({Rational(1), {ed->name, ed->name + "*"}});
        rels.push_back(relation_eq(field, std::move(lhs), {{Rational(1), {v}}}));
        // e* f = delta_ef r(e) for e, f with the same source
        for (const Edge* a : out)
            for (const Edge* b : out) {
                std::vector<ATerm> rhs;
                if (a == b) rhs.push_back({Rational(1), {a->dst}});
                rels.push_back(relation_eq(field, {{Rational(1), {a->name + "*", b->name}}},
                                           std::move(rhs)));
            }
    }
    return make_algebra_presentation(z, field, std::move(gens), std::move(rels), true);
}

MonoidPresentation talented_presentation(const Graph& e) {
    e.validate();
    GradeGroup z = GradeGroup::integers();
    std::vector<MRelation> rels;
    MWord unit;
    for (const auto& v : e.vertices) unit = word_add(unit, word_of(v, g_zero(z)));
    for (const auto& v : e.regular_vertices()) {
        MWord rhs;
        for (const Edge* ed : e.out_edges(v)) rhs = word_add(rhs, word_of(ed->dst, g_int(z, 1)));
        rels.push_back({word_of(v, g_zero(z)), rhs});
    }
    return make_presentation(z, e.vertices, std::move(rels), unit, false);
}

MonoidPresentation hyper_vgr_presentation(const Hypergraph& h, const WeightMap& w) {
    validate_weights(h, w);
    std::vector<MRelation> rels;
    MWord unit;
    for (const auto& v : h.vertices) unit = word_add(unit, word_of(v, g_zero(w.group)));
    for (const auto& he : h.hyperedges) {
        const HedgeWeights& hw = w.weights.at(he.name);
        MWord lhs, rhs;
        for (std::size_t i = 0; i < he.sources.size(); ++i)
            lhs = word_add(lhs, word_of(he.sources[i], hw.a[i]));
        for (std::size_t j = 0; j < he.ranges.size(); ++j)
            rhs = word_add(rhs, word_of(he.ranges[j], hw.b[j]));
        rels.push_back({lhs, rhs});
    }
    return make_presentation(w.group, h.vertices, std::move(rels), unit, false);
}

ChainReport localization_chain_check(const Graph& e, const Field& field) {
    ChainReport rep;
    rep.path_algebra = path_algebra_presentation(e, field);
    auto [h, w] = graph_to_hypergraph(e);
    rep.data = hypergraph_to_bergman(h, w, field);
    rep.bergman_level4 = bergman_presentation(rep.data, 4);
    rep.hyper_lpa = hyper_lpa_presentation(h, w, field);
    rep.lpa = lpa_presentation(e, field);

    std::map<std::string, std::string> berg_to_hyper;
    for (const auto& t : rep.data.ring.components) berg_to_hyper[eps_name(t)] = t;
    for (const auto& he : h.hyperedges)
        for (std::size_t i = 0; i < he.sources.size(); ++i)
            for (std::size_t j = 0; j < he.ranges.size(); ++j) {
                berg_to_hyper[pair_sym(he.name, i + 1, j + 1)] = hyper_sym(he.name, i + 1, j + 1);
                berg_to_hyper[pair_sym_star(he.name, j + 1, i + 1)] =
                    hyper_sym_star(he.name, i + 1, j + 1);
            }
    rep.bergman_vs_hyper = rename_equal(rep.bergman_level4, rep.hyper_lpa, berg_to_hyper);

    std::map<std::string, std::string> hyper_to_lpa;
    for (const auto& v : e.vertices) hyper_to_lpa[v] = v;
    for (const auto& v : e.regular_vertices()) {
        auto out = e.out_edges(v);
        for (std::size_t j = 0; j < out.size(); ++j) {
            hyper_to_lpa[hyper_sym(v, 1, j + 1)] = out[j]->name;
            hyper_to_lpa[hyper_sym_star(v, 1, j + 1)] = out[j]->name + "*";
        }
    }
    rep.hyper_vs_lpa = rename_equal(rep.hyper_lpa, rep.lpa, hyper_to_lpa);

    rep.pass = rep.bergman_vs_hyper.equal && rep.hyper_vs_lpa.equal;
    return rep;
}

} // namespace gkt
