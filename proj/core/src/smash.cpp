#include "gkt/smash.hpp"

#include <algorithm>
#include <set>

namespace gkt {

std::string smash_eps_name(const GradeGroup& g, const std::string& component,
                           const GradeElement& beta) {
    return "eps(" + component + ")p(" + format_elem(g, beta) + ")";
}

std::string smash_sym(const GradeGroup& g, const std::string& label, std::size_t j, std::size_t m,
                      const GradeElement& gamma) {
    return label + "(" + std::to_string(j) + "," + std::to_string(m) + ")^(" +
           format_elem(g, gamma) + ")";
}

std::string smash_sym_prime(const GradeGroup& g, const std::string& label, std::size_t m,
                            std::size_t j, const GradeElement& gamma) {
    return label + "'(" + std::to_string(m) + "," + std::to_string(j) + ")^(" +
           format_elem(g, gamma) + ")";
}

namespace {

struct GLess {
    bool operator()(const GradeElement& a, const GradeElement& b) const { return g_cmp(a, b) < 0; }
};

std::vector<GradeElement> sorted_window(std::set<GradeElement, GLess>&& s) {
    return {s.begin(), s.end()};
}

// A is a finite subset of the grade group: dedupe and order it.
std::vector<GradeElement> canonical_subset(const GradeGroup& g,
                                           const std::vector<GradeElement>& a) {
    std::set<GradeElement, GLess> s;
    for (const auto& x : a) {
        g_check(g, x);
        s.insert(x);
    }
    return {s.begin(), s.end()};
}

} // namespace

std::vector<GradeElement> smash_window(const BergmanData& data,
                                       const std::vector<GradeElement>& a) {
    data.validate();
    std::set<GradeElement, GLess> win;
    for (const auto& gamma : a) {
        g_check(data.group, gamma);
        for (const auto& pair : data.pairs) {
            for (const auto& beta : pair.e.shifts) win.insert(g_sub(data.group, gamma, beta));
            for (const auto& gm : pair.f.shifts) win.insert(g_sub(data.group, gamma, gm));
        }
    }
    return sorted_window(std::move(win));
}

std::vector<GradeElement> smash_window_idem(const GradeGroup& g, const ShiftedIdempotent& e,
                                            const std::vector<GradeElement>& a) {
    std::set<GradeElement, GLess> win;
    for (const auto& gamma : a) {
        g_check(g, gamma);
        for (const auto& beta : e.shifts) win.insert(g_sub(g, gamma, beta));
    }
    return sorted_window(std::move(win));
}

namespace {

// Shared emission context for the pair and idempotent variants.
struct Emit {
    const GradeGroup& g;
    const SemisimpleRing& R;
    std::vector<AGen> gens;
    std::vector<ARelation> rels;

    void base_block(const std::vector<GradeElement>& window, bool unital) {
        const Field& f = R.field;
        for (const auto& t : R.components)
            for (const auto& beta : window)
                gens.push_back({smash_eps_name(g, t, beta), GradeElement{}});
        for (const auto& t : R.components)
            for (const auto& beta : window)
                for (const auto& s : R.components)
                    for (const auto& beta2 : window) {
                        std::vector<ATerm> terms{
                            {Rational(1),
                             {smash_eps_name(g, t, beta), smash_eps_name(g, s, beta2)}}};
                        if (t == s && beta == beta2)
                            terms.push_back({f.neg(Rational(1)), {smash_eps_name(g, t, beta)}});
                        rels.push_back(make_relation(f, std::move(terms)));
                    }
        if (unital && !window.empty()) {
            std::vector<ATerm> sum;
            for (const auto& t : R.components)
                for (const auto& beta : window)
                    sum.push_back({Rational(1), {smash_eps_name(g, t, beta)}});
            sum.push_back({f.neg(Rational(1)), {}});
            rels.push_back(make_relation(f, std::move(sum)));
        }
    }

    // Terms: coeff * scalar_t * [eps_t p(beta)] placed left or right of mid.
    void scalar_terms(std::vector<ATerm>& out, const RingElem& r, const GradeElement& beta,
                      const Rational& scale, const std::string& mid, bool scalar_left) {
        for (std::size_t t = 0; t < R.components.size(); ++t) {
            Rational c = R.field.mul(scale, r.comps[t]);
            if (R.field.is_zero(c)) continue;
            std::string ep = smash_eps_name(g, R.components[t], beta);
            AWord w = scalar_left ? AWord{ep, mid} : AWord{mid, ep};
            out.push_back({c, std::move(w)});
        }
    }

    // sum_t [sym, eps_t p(beta)] = [sym]  (or the mirrored version).
    ARelation monomial(const std::string& sym, const GradeElement& beta, bool probe_right) {
        std::vector<ATerm> terms;
        for (const auto& t : R.components) {
            std::string ep = smash_eps_name(g, t, beta);
            AWord w = probe_right ? AWord{sym, ep} : AWord{ep, sym};
            terms.push_back({Rational(1), std::move(w)});
        }
        terms.push_back({R.field.neg(Rational(1)), {sym}});
        return make_relation(R.field, std::move(terms));
    }
};

void push_if_nontrivial(std::vector<ARelation>& rels, ARelation r) {
    if (!r.is_trivial()) rels.push_back(std::move(r));
}

} // namespace

AlgebraPresentation smash_ring_presentation(const BergmanData& data,
                                            const std::vector<GradeElement>& a) {
    std::vector<GradeElement> window = smash_window(data, a);
    Emit em{data.group, data.ring, {}, {}};
    em.base_block(window, !window.empty());
    return make_algebra_presentation(GradeGroup::trivial(), data.ring.field, std::move(em.gens),
                                     std::move(em.rels), !window.empty());
}

namespace {

// Emits T_A or B_A (monomials included iff with_monomials).
AlgebraPresentation smash_piece(const BergmanData& data, const std::vector<GradeElement>& a_in,
                                bool with_monomials) {
    std::vector<GradeElement> a = canonical_subset(data.group, a_in);
    std::vector<GradeElement> window = smash_window(data, a);
    Emit em{data.group, data.ring, {}, {}};
    em.base_block(window, !window.empty());
    const Field& f = data.ring.field;

    for (const auto& pair : data.pairs) {
        const std::size_t me = pair.e.size(), nf = pair.f.size();
        const auto& beta = pair.e.shifts;
        const auto& gam = pair.f.shifts;
        for (const auto& gamma : a) {
            auto h = [&](std::size_t j, std::size_t m) {
                return smash_sym(data.group, pair.label, j + 1, m + 1, gamma);
            };
            auto hp = [&](std::size_t m, std::size_t j) {
                return smash_sym_prime(data.group, pair.label, m + 1, j + 1, gamma);
            };
            auto p_beta = [&](std::size_t j) { return g_sub(data.group, gamma, beta[j]); };
            auto p_gam = [&](std::size_t m) { return g_sub(data.group, gamma, gam[m]); };

            for (std::size_t j = 0; j < me; ++j)
                for (std::size_t m = 0; m < nf; ++m) {
                    em.gens.push_back({h(j, m), GradeElement{}});
                    em.gens.push_back({hp(m, j), GradeElement{}});
                }
            if (with_monomials)
                for (std::size_t j = 0; j < me; ++j)
                    for (std::size_t m = 0; m < nf; ++m) {
                        em.rels.push_back(em.monomial(h(j, m), p_gam(m), true));
                        em.rels.push_back(em.monomial(h(j, m), p_beta(j), false));
                        em.rels.push_back(em.monomial(hp(m, j), p_beta(j), true));
                        em.rels.push_back(em.monomial(hp(m, j), p_gam(m), false));
                    }
            // sum_i d_ji h_im = h_jm = sum_k h_jk e_km
            for (std::size_t j = 0; j < me; ++j)
                for (std::size_t m = 0; m < nf; ++m) {
                    std::vector<ATerm> dh;
                    for (std::size_t i = 0; i < me; ++i)
                        em.scalar_terms(dh, pair.e.entries.at(j, i), p_beta(i), Rational(1),
                                        h(i, m), true);
                    dh.push_back({f.neg(Rational(1)), {h(j, m)}});
                    push_if_nontrivial(em.rels, make_relation(f, std::move(dh)));

                    std::vector<ATerm> he;
                    for (std::size_t k = 0; k < nf; ++k)
                        em.scalar_terms(he, pair.f.entries.at(k, m), p_gam(m), Rational(1),
                                        h(j, k), false);
                    he.push_back({f.neg(Rational(1)), {h(j, m)}});
                    push_if_nontrivial(em.rels, make_relation(f, std::move(he)));
                }
            // sum_k e_mk h'_kj = h'_mj = sum_i h'_mi d_ij
            for (std::size_t m = 0; m < nf; ++m)
                for (std::size_t j = 0; j < me; ++j) {
                    std::vector<ATerm> eh;
                    for (std::size_t k = 0; k < nf; ++k)
                        em.scalar_terms(eh, pair.f.entries.at(m, k), p_gam(k), Rational(1),
                                        hp(k, j), true);
                    eh.push_back({f.neg(Rational(1)), {hp(m, j)}});
                    push_if_nontrivial(em.rels, make_relation(f, std::move(eh)));

                    std::vector<ATerm> hd;
                    for (std::size_t i = 0; i < me; ++i)
                        em.scalar_terms(hd, pair.e.entries.at(i, j), p_beta(j), Rational(1),
                                        hp(m, i), false);
                    hd.push_back({f.neg(Rational(1)), {hp(m, j)}});
                    push_if_nontrivial(em.rels, make_relation(f, std::move(hd)));
                }
            // sum_m h_im h'_mj = d_ij
            for (std::size_t i = 0; i < me; ++i)
                for (std::size_t j = 0; j < me; ++j) {
                    std::vector<ATerm> terms;
                    for (std::size_t m = 0; m < nf; ++m)
                        terms.push_back({Rational(1), {h(i, m), hp(m, j)}});
                    em.scalar_terms(terms, pair.e.entries.at(i, j), p_beta(j),
                                    f.neg(Rational(1)), "", true);
                    // drop the placeholder mid for pure scalar terms
                    for (auto& t : terms)
                        t.word.erase(std::remove(t.word.begin(), t.word.end(), ""), t.word.end());
                    push_if_nontrivial(em.rels, make_relation(f, std::move(terms)));
                }
            // sum_j h'_kj h_jm = e_km
            for (std::size_t k = 0; k < nf; ++k)
                for (std::size_t m = 0; m < nf; ++m) {
                    std::vector<ATerm> terms;
                    for (std::size_t j = 0; j < me; ++j)
                        terms.push_back({Rational(1), {hp(k, j), h(j, m)}});
                    em.scalar_terms(terms, pair.f.entries.at(k, m), p_gam(m),
                                    f.neg(Rational(1)), "", true);
                    for (auto& t : terms)
                        t.word.erase(std::remove(t.word.begin(), t.word.end(), ""), t.word.end());
                    push_if_nontrivial(em.rels, make_relation(f, std::move(terms)));
                }
        }
    }
    return make_algebra_presentation(GradeGroup::trivial(), f, std::move(em.gens),
                                     std::move(em.rels), !window.empty());
}

} // namespace

AlgebraPresentation smash_TA_presentation(const BergmanData& data,
                                          const std::vector<GradeElement>& a) {
    return smash_piece(data, a, true);
}

AlgebraPresentation smash_BA_presentation(const BergmanData& data,
                                          const std::vector<GradeElement>& a) {
    return smash_piece(data, a, false);
}

namespace {

AlgebraPresentation smash_idem_piece(const GradeGroup& g, const SemisimpleRing& ring,
                                     const ShiftedIdempotent& e,
                                     const std::vector<GradeElement>& a_in,
                                     const std::string& label, bool with_monomials) {
    IdempotentReport rep = validate_idempotent(g, e);
    if (!rep.ok) throw spec_error("invalid idempotent");
    std::vector<GradeElement> a = canonical_subset(g, a_in);
    std::set<GradeElement, GLess> win;
    for (const auto& gamma : a) {
        g_check(g, gamma);
        for (const auto& beta : e.shifts) win.insert(g_sub(g, gamma, beta));
    }
    std::vector<GradeElement> window = sorted_window(std::move(win));

    Emit em{g, ring, {}, {}};
    em.base_block(window, !window.empty());
    const Field& f = ring.field;
    const std::size_t n = e.size();
    const auto& beta = e.shifts;

    for (const auto& gamma : a) {
        auto sym = [&](std::size_t i, std::size_t j) {
            return smash_sym(g, label, i + 1, j + 1, gamma);
        };
        auto p_beta = [&](std::size_t j) { return g_sub(g, gamma, beta[j]); };
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) em.gens.push_back({sym(i, j), GradeElement{}});
        if (with_monomials)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    em.rels.push_back(em.monomial(sym(i, j), p_beta(j), true));
                    em.rels.push_back(em.monomial(sym(i, j), p_beta(i), false));
                }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<ATerm> de;
                for (std::size_t k = 0; k < n; ++k)
                    em.scalar_terms(de, e.entries.at(i, k), p_beta(k), Rational(1), sym(k, j),
                                    true);
                de.push_back({f.neg(Rational(1)), {sym(i, j)}});
                push_if_nontrivial(em.rels, make_relation(f, std::move(de)));

                std::vector<ATerm> ed;
                for (std::size_t k = 0; k < n; ++k)
                    em.scalar_terms(ed, e.entries.at(k, j), p_beta(j), Rational(1), sym(i, k),
                                    false);
                ed.push_back({f.neg(Rational(1)), {sym(i, j)}});
                push_if_nontrivial(em.rels, make_relation(f, std::move(ed)));

                std::vector<ATerm> sq;
                for (std::size_t k = 0; k < n; ++k)
                    sq.push_back({Rational(1), {sym(i, k), sym(k, j)}});
                sq.push_back({f.neg(Rational(1)), {sym(i, j)}});
                push_if_nontrivial(em.rels, make_relation(f, std::move(sq)));
            }
    }
    return make_algebra_presentation(GradeGroup::trivial(), f, std::move(em.gens),
                                     std::move(em.rels), !window.empty());
}

std::vector<RewriteRule> base_collapse_rules(const AlgebraPresentation& ba,
                                             const std::string& eps_prefix = "eps(") {
    // The product relations on the idempotent basis, oriented as collapses.
    std::vector<RewriteRule> rules;
    std::vector<std::string> base;
    for (const auto& g : ba.generators)
        if (g.name.compare(0, eps_prefix.size(), eps_prefix) == 0) base.push_back(g.name);
    for (const auto& x : base)
        for (const auto& y : base) {
            RewriteRule r;
            r.lhs = {x, y};
            if (x == y) r.rhs = {{Rational(1), {x}}};
            r.eager = true;
            rules.push_back(std::move(r));
        }
    return rules;
}

SmashCheckReport run_check(AlgebraPresentation ta, AlgebraPresentation ba,
                           std::vector<std::pair<std::string, std::pair<ARelation, RewriteRule>>>
                               obligations,
                           int prover_depth) {
    SmashCheckReport rep;
    rep.ta = std::move(ta);
    rep.ba = std::move(ba);
    std::vector<RewriteRule> collapses = base_collapse_rules(rep.ba);

    bool all_proved = true;
    std::vector<ARelation> proved;
    for (auto& [desc, ob] : obligations) {
        std::vector<RewriteRule> rules = collapses;
        rules.push_back(ob.second);
        ProveResult pr = bounded_rewrite_prove(rep.ba, ob.first, rules, prover_depth);
        all_proved = all_proved && pr.proved;
        if (pr.proved) proved.push_back(ob.first);
        rep.obligations.push_back({desc, ob.first, std::move(pr)});
    }

    std::vector<ARelation> ext = rep.ba.relations;
    ext.insert(ext.end(), proved.begin(), proved.end());
    AlgebraPresentation ba_ext = make_algebra_presentation(
        rep.ba.group, rep.ba.field, rep.ba.generators, std::move(ext), rep.ba.unital);
    std::map<std::string, std::string> identity;
    for (const auto& g : rep.ta.generators) identity[g.name] = g.name;
    rep.rename = rename_equal(rep.ta, ba_ext, identity);
    rep.pass = all_proved && rep.rename.equal;
    return rep;
}

} // namespace

AlgebraPresentation smash_TA_idem_presentation(const GradeGroup& g, const SemisimpleRing& ring,
                                               const ShiftedIdempotent& e,
                                               const std::vector<GradeElement>& a,
                                               const std::string& label) {
    return smash_idem_piece(g, ring, e, a, label, true);
}

AlgebraPresentation smash_BA_idem_presentation(const GradeGroup& g, const SemisimpleRing& ring,
                                               const ShiftedIdempotent& e,
                                               const std::vector<GradeElement>& a,
                                               const std::string& label) {
    return smash_idem_piece(g, ring, e, a, label, false);
}

SmashCheckReport propbergsmash_check(const BergmanData& data,
                                     const std::vector<GradeElement>& a_in, int prover_depth) {
    std::vector<GradeElement> a = canonical_subset(data.group, a_in);
    AlgebraPresentation ta = smash_TA_presentation(data, a);
    AlgebraPresentation ba = smash_BA_presentation(data, a);
    const SemisimpleRing& R = data.ring;

    std::vector<std::pair<std::string, std::pair<ARelation, RewriteRule>>> obligations;
    Emit em{data.group, R, {}, {}};
    for (const auto& pair : data.pairs) {
        const std::size_t me = pair.e.size(), nf = pair.f.size();
        const auto& beta = pair.e.shifts;
        const auto& gam = pair.f.shifts;
        for (const auto& gamma : a) {
            auto h = [&](std::size_t j, std::size_t m) {
                return smash_sym(data.group, pair.label, j + 1, m + 1, gamma);
            };
            auto hp = [&](std::size_t m, std::size_t j) {
                return smash_sym_prime(data.group, pair.label, m + 1, j + 1, gamma);
            };
            auto p_beta = [&](std::size_t j) { return g_sub(data.group, gamma, beta[j]); };
            auto p_gam = [&](std::size_t m) { return g_sub(data.group, gamma, gam[m]); };

            for (std::size_t j = 0; j < me; ++j)
                for (std::size_t m = 0; m < nf; ++m) {
                    // h_jm * (1 p_{gamma - gamma_m}) = h_jm, unfolded through h e.
                    RewriteRule he;
                    he.lhs = {h(j, m)};
                    for (std::size_t k = 0; k < nf; ++k)
                        em.scalar_terms(he.rhs, pair.f.entries.at(k, m), p_gam(m), Rational(1),
                                        h(j, k), false);
                    obligations.push_back(
                        {"monomial right " + h(j, m),
                         {em.monomial(h(j, m), p_gam(m), true), he}});

                    // (1 p_{gamma - beta_j}) h_jm = h_jm, unfolded through d h.
                    RewriteRule dh;
                    dh.lhs = {h(j, m)};
                    for (std::size_t i = 0; i < me; ++i)
                        em.scalar_terms(dh.rhs, pair.e.entries.at(j, i), p_beta(i), Rational(1),
                                        h(i, m), true);
                    obligations.push_back(
                        {"monomial left " + h(j, m),
                         {em.monomial(h(j, m), p_beta(j), false), dh}});

                    // h'_mj * (1 p_{gamma - beta_j}) = h'_mj, through h' d.
                    RewriteRule hd;
                    hd.lhs = {hp(m, j)};
                    for (std::size_t i = 0; i < me; ++i)
                        em.scalar_terms(hd.rhs, pair.e.entries.at(i, j), p_beta(j), Rational(1),
                                        hp(m, i), false);
                    obligations.push_back(
                        {"monomial right " + hp(m, j),
                         {em.monomial(hp(m, j), p_beta(j), true), hd}});

                    // (1 p_{gamma - gamma_m}) h'_mj = h'_mj, through e h'.
                    RewriteRule eh;
                    eh.lhs = {hp(m, j)};
                    for (std::size_t k = 0; k < nf; ++k)
                        em.scalar_terms(eh.rhs, pair.f.entries.at(m, k), p_gam(k), Rational(1),
                                        hp(k, j), true);
                    obligations.push_back(
                        {"monomial left " + hp(m, j),
                         {em.monomial(hp(m, j), p_gam(m), false), eh}});
                }
        }
    }
    return run_check(std::move(ta), std::move(ba), std::move(obligations), prover_depth);
}

SmashCheckReport propbergsmash_idem_check(const GradeGroup& g, const SemisimpleRing& ring,
                                          const ShiftedIdempotent& e,
                                          const std::vector<GradeElement>& a_in,
                                          const std::string& label, int prover_depth) {
    std::vector<GradeElement> a = canonical_subset(g, a_in);
    AlgebraPresentation ta = smash_TA_idem_presentation(g, ring, e, a, label);
    AlgebraPresentation ba = smash_BA_idem_presentation(g, ring, e, a, label);
    const std::size_t n = e.size();
    const auto& beta = e.shifts;

    std::vector<std::pair<std::string, std::pair<ARelation, RewriteRule>>> obligations;
    Emit em{g, ring, {}, {}};
    for (const auto& gamma : a) {
        auto sym = [&](std::size_t i, std::size_t j) {
            return smash_sym(g, label, i + 1, j + 1, gamma);
        };
        auto p_beta = [&](std::size_t j) { return g_sub(g, gamma, beta[j]); };
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                RewriteRule ed; // f_ij = sum_k f_ik d_kj
                ed.lhs = {sym(i, j)};
                for (std::size_t k = 0; k < n; ++k)
                    em.scalar_terms(ed.rhs, e.entries.at(k, j), p_beta(j), Rational(1), sym(i, k),
                                    false);
                obligations.push_back(
                    {"monomial right " + sym(i, j), {em.monomial(sym(i, j), p_beta(j), true), ed}});

                RewriteRule de; // f_ij = sum_k d_ik f_kj
                de.lhs = {sym(i, j)};
                for (std::size_t k = 0; k < n; ++k)
                    em.scalar_terms(de.rhs, e.entries.at(i, k), p_beta(k), Rational(1), sym(k, j),
                                    true);
                obligations.push_back(
                    {"monomial left " + sym(i, j), {em.monomial(sym(i, j), p_beta(i), false), de}});
            }
    }
    return run_check(std::move(ta), std::move(ba), std::move(obligations), prover_depth);
}

} // namespace gkt
