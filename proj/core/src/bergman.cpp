#include "gkt/bergman.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace gkt {

void BergmanData::validate() const {
    group.validate();
    ring.validate();
    std::set<std::string> labels;
    for (const auto& p : pairs) {
        if (p.label.empty()) throw spec_error("empty pair label");
        if (!labels.insert(p.label).second) throw spec_error("duplicate pair label '" + p.label + "'");
        if (!(p.e.ring == ring) || !(p.f.ring == ring))
            throw spec_error("pair '" + p.label + "' not over the declared ring");
        IdempotentReport re = validate_idempotent(group, p.e);
        IdempotentReport rf = validate_idempotent(group, p.f);
        if (!re.ok || !rf.ok) throw spec_error("pair '" + p.label + "' has an invalid idempotent");
    }
}

std::string eps_name(const std::string& component) { return "eps(" + component + ")"; }

std::string pair_sym(const std::string& label, std::size_t i, std::size_t j) {
    return label + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::string pair_sym_star(const std::string& label, std::size_t j, std::size_t i) {
    return label + "*(" + std::to_string(j) + "," + std::to_string(i) + ")";
}

namespace {

// eps_t generators plus the orthogonal-idempotent and unit relations.
void base_ring_block(const SemisimpleRing& R, const GradeGroup& g, std::vector<AGen>& gens,
                     std::vector<ARelation>& rels, bool unital) {
    const Field& f = R.field;
    for (const auto& t : R.components) gens.push_back({eps_name(t), g_zero(g)});
    for (const auto& t : R.components)
        for (const auto& s : R.components) {
            std::vector<ATerm> terms{{Rational(1), {eps_name(t), eps_name(s)}}};
            if (t == s) terms.push_back({f.neg(Rational(1)), {eps_name(t)}});
            rels.push_back(make_relation(f, std::move(terms)));
        }
    if (unital) {
        std::vector<ATerm> sum;
        for (const auto& t : R.components) sum.push_back({Rational(1), {eps_name(t)}});
        sum.push_back({f.neg(Rational(1)), {}});
        rels.push_back(make_relation(f, std::move(sum)));
    }
}

// Scalar r in k^T as a linear combination of one-letter eps words,
// optionally multiplied around a middle word.
void append_scalar_terms(const SemisimpleRing& R, std::vector<ATerm>& out, const RingElem& r,
                         const Rational& scale, const AWord& mid_left, const AWord& mid_right) {
    for (std::size_t t = 0; t < R.components.size(); ++t) {
        Rational c = R.field.mul(scale, r.comps[t]);
        if (R.field.is_zero(c)) continue;
        AWord w = mid_left;
        w.push_back(eps_name(R.components[t]));
        w.insert(w.end(), mid_right.begin(), mid_right.end());
        out.push_back({c, std::move(w)});
    }
}

// Entrywise expansion of  sum_{k,l} e[i][k] * sym(k,l) * f[l][j] = sym(i,j).
ARelation sandwich_relation(const SemisimpleRing& R, const Mat& left, const Mat& right,
                            std::size_t i, std::size_t j,
                            const std::function<std::string(std::size_t, std::size_t)>& sym) {
    const Field& fld = R.field;
    std::vector<ATerm> terms;
    for (std::size_t k = 0; k < left.cols; ++k)
        for (std::size_t l = 0; l < right.rows; ++l) {
            const RingElem& a = left.at(i, k);
            const RingElem& b = right.at(l, j);
            for (std::size_t t = 0; t < R.components.size(); ++t)
                for (std::size_t s = 0; s < R.components.size(); ++s) {
                    Rational c = fld.mul(a.comps[t], b.comps[s]);
                    if (fld.is_zero(c)) continue;
                    terms.push_back({c,
                                     {eps_name(R.components[t]), sym(k, l),
                                      eps_name(R.components[s])}});
                }
        }
    terms.push_back({fld.neg(Rational(1)), {sym(i, j)}});
    return make_relation(fld, std::move(terms));
}

// Entrywise expansion of  sum_k lsym(i,k) * rsym(k,j) = target[i][j].
ARelation product_relation(const SemisimpleRing& R, std::size_t inner, const Mat& target,
                           std::size_t i, std::size_t j,
                           const std::function<std::string(std::size_t, std::size_t)>& lsym,
                           const std::function<std::string(std::size_t, std::size_t)>& rsym) {
    std::vector<ATerm> terms;
    for (std::size_t k = 0; k < inner; ++k) terms.push_back({Rational(1), {lsym(i, k), rsym(k, j)}});
    append_scalar_terms(R, terms, target.at(i, j), R.field.neg(Rational(1)), {}, {});
    return make_relation(R.field, std::move(terms));
}

void push_if_nontrivial(std::vector<ARelation>& rels, ARelation r) {
    if (!r.is_trivial()) rels.push_back(std::move(r));
}

} // namespace

AlgebraPresentation bergman_presentation(const BergmanData& data, int level) {
    if (level < 1 || level > 4) throw spec_error("bergman level must be 1..4");
    data.validate();
    const SemisimpleRing& R = data.ring;

    std::vector<AGen> gens;
    std::vector<ARelation> rels;
    base_ring_block(R, data.group, gens, rels, true);

    for (const auto& pair : data.pairs) {
        const std::size_t m = pair.e.size(), n = pair.f.size();
        auto h = [&](std::size_t i, std::size_t j) { return pair_sym(pair.label, i + 1, j + 1); };
        auto hs = [&](std::size_t j, std::size_t i) {
            return pair_sym_star(pair.label, j + 1, i + 1);
        };
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                gens.push_back({h(i, j), g_sub(data.group, pair.f.shifts[j], pair.e.shifts[i])});
                if (level >= 2)
                    gens.push_back(
                        {hs(j, i), g_sub(data.group, pair.e.shifts[i], pair.f.shifts[j])});
            }
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                push_if_nontrivial(
                    rels, sandwich_relation(R, pair.e.entries, pair.f.entries, i, j, h));
        if (level >= 2)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t i = 0; i < m; ++i)
                    push_if_nontrivial(
                        rels, sandwich_relation(R, pair.f.entries, pair.e.entries, j, i, hs));
        if (level >= 3)
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t i2 = 0; i2 < m; ++i2)
                    push_if_nontrivial(rels,
                                       product_relation(R, n, pair.e.entries, i, i2, h, hs));
        if (level >= 4)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t j2 = 0; j2 < n; ++j2)
                    push_if_nontrivial(rels,
                                       product_relation(R, m, pair.f.entries, j, j2, hs, h));
    }
    return make_algebra_presentation(data.group, R.field, std::move(gens), std::move(rels), true);
}

AlgebraPresentation bergman_idem_presentation(const GradeGroup& g, const SemisimpleRing& ring,
                                              const ShiftedIdempotent& e,
                                              const std::string& label) {
    IdempotentReport rep = validate_idempotent(g, e);
    if (!rep.ok) throw spec_error("invalid idempotent");
    const std::size_t n = e.size();
    auto h = [&](std::size_t k, std::size_t l) { return pair_sym(label, k + 1, l + 1); };

    std::vector<AGen> gens;
    std::vector<ARelation> rels;
    base_ring_block(ring, g, gens, rels, true);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
            gens.push_back({h(k, l), g_sub(g, e.shifts[l], e.shifts[k])});
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            push_if_nontrivial(rels, sandwich_relation(ring, e.entries, e.entries, k, l, h));
            // h^2 = h, entry (k, l)
            std::vector<ATerm> terms;
            for (std::size_t q = 0; q < n; ++q) terms.push_back({Rational(1), {h(k, q), h(q, l)}});
            terms.push_back({ring.field.neg(Rational(1)), {h(k, l)}});
            push_if_nontrivial(rels, make_relation(ring.field, std::move(terms)));
        }
    return make_algebra_presentation(g, ring.field, std::move(gens), std::move(rels), true);
}

AlgebraPresentation localization_presentation(const GradeGroup& g, const SemisimpleRing& ring,
                                              const ShiftedIdempotent& e,
                                              const ShiftedIdempotent& f, const Mat& h_g,
                                              const std::string& label) {
    IdempotentReport re = validate_idempotent(g, e);
    IdempotentReport rf = validate_idempotent(g, f);
    if (!re.ok || !rf.ok) throw spec_error("invalid idempotent");
    const std::size_t n = e.size(), m = f.size();
    if (h_g.rows != n || h_g.cols != m) throw spec_error("h_g must be n x m for e n x n, f m x m");
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < m; ++k)
            if (!(e.shifts[j] == f.shifts[k]) && !r_is_zero(ring, h_g.at(j, k)))
                throw spec_error("h_g entry (" + std::to_string(j + 1) + "," +
                                 std::to_string(k + 1) + ") breaks degree-zero homogeneity");
    Mat ehf = m_mul(ring, m_mul(ring, e.entries, h_g), f.entries);
    if (!(ehf == h_g)) throw spec_error("h_g fails the compatibility e h_g f = h_g");

    auto hstar = [&](std::size_t k, std::size_t j) { return pair_sym_star(label, k + 1, j + 1); };
    std::vector<AGen> gens;
    std::vector<ARelation> rels;
    base_ring_block(ring, g, gens, rels, true);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t j = 0; j < n; ++j)
            gens.push_back({hstar(k, j), g_sub(g, e.shifts[j], f.shifts[k])});

    // f h* e = h*
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t j = 0; j < n; ++j)
            push_if_nontrivial(rels, sandwich_relation(ring, f.entries, e.entries, k, j, hstar));
    // h_g h* = e
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<ATerm> terms;
            for (std::size_t k = 0; k < m; ++k)
                append_scalar_terms(ring, terms, h_g.at(i, k), Rational(1), {}, {hstar(k, j)});
            append_scalar_terms(ring, terms, e.entries.at(i, j), ring.field.neg(Rational(1)), {},
                                {});
            push_if_nontrivial(rels, make_relation(ring.field, std::move(terms)));
        }
    // h* h_g = f
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) {
            std::vector<ATerm> terms;
            for (std::size_t j = 0; j < n; ++j)
                append_scalar_terms(ring, terms, h_g.at(j, l), Rational(1), {hstar(k, j)}, {});
            append_scalar_terms(ring, terms, f.entries.at(k, l), ring.field.neg(Rational(1)), {},
                                {});
            push_if_nontrivial(rels, make_relation(ring.field, std::move(terms)));
        }
    return make_algebra_presentation(g, ring.field, std::move(gens), std::move(rels), true);
}

AlgebraPresentation localization_presentation(const GradeGroup& g, const SemisimpleRing& ring,
                                              const ShiftedIdempotent& e,
                                              const ShiftedIdempotent& f,
                                              const std::string& label) {
    BergmanData data;
    data.group = g;
    data.ring = ring;
    data.pairs.push_back({label, e, f});
    return bergman_presentation(data, 4);
}

BergmanToHypergraph bergman_to_hypergraph(const BergmanData& data) {
    data.validate();
    BergmanToHypergraph out;
    out.hypergraph.name = "H";
    out.hypergraph.vertices = data.ring.components;
    out.weights.group = data.group;

    for (const auto& pair : data.pairs) {
        DiagonalizeResult de = diagonalize(data.group, pair.e);
        DiagonalizeResult df = diagonalize(data.group, pair.f);
        if (de.diagonal.slots.empty() || df.diagonal.slots.empty())
            throw spec_error("pair '" + pair.label +
                             "' has a zero idempotent; nonzero projectives are required");
        Hyperedge he;
        he.name = pair.label;
        HedgeWeights hw;
        const GradeElement base = de.diagonal.slots.front().second;
        for (const auto& [t, alpha] : de.diagonal.slots) {
            he.sources.push_back(t);
            hw.a.push_back(g_sub(data.group, alpha, base));
        }
        for (const auto& [t, beta] : df.diagonal.slots) {
            he.ranges.push_back(t);
            hw.b.push_back(g_sub(data.group, beta, base));
        }
        out.weights.weights[he.name] = std::move(hw);
        out.hypergraph.hyperedges.push_back(std::move(he));
        out.witnesses.push_back({pair.label, de.witness, df.witness});
    }
    validate_weights(out.hypergraph, out.weights);
    return out;
}

BergmanData hypergraph_to_bergman(const Hypergraph& h, const WeightMap& w, const Field& field) {
    validate_weights(h, w);
    BergmanData data;
    data.group = w.group;
    data.ring = SemisimpleRing{h.vertices, field};
    data.ring.validate();
    for (const auto& he : h.hyperedges) {
        const HedgeWeights& hw = w.weights.at(he.name);
        DiagonalIdempotent de, df;
        for (std::size_t i = 0; i < he.sources.size(); ++i)
            de.slots.emplace_back(he.sources[i], hw.a[i]);
        for (std::size_t j = 0; j < he.ranges.size(); ++j)
            df.slots.emplace_back(he.ranges[j], hw.b[j]);
        data.pairs.push_back({he.name, diagonal_idempotent(data.group, data.ring, de),
                              diagonal_idempotent(data.group, data.ring, df)});
    }
    return data;
}

} // namespace gkt
