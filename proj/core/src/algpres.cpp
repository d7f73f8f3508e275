#include "gkt/algpres.hpp"

#include <algorithm>
#include <set>

namespace gkt {

bool aword_less(const AWord& a, const AWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

ARelation make_relation(const Field& f, std::vector<ATerm> terms) {
    std::map<AWord, Rational> merged;
    for (auto& t : terms) merged[t.word] = f.add(merged.count(t.word) ? merged[t.word] : 0, t.coeff);
    ARelation r;
    for (auto& [w, c] : merged)
        if (!f.is_zero(c)) r.terms.push_back({c, w});
    std::sort(r.terms.begin(), r.terms.end(),
              [](const ATerm& x, const ATerm& y) { return aword_less(y.word, x.word); });
    if (!r.terms.empty()) {
        Rational lead = r.terms.front().coeff;
        for (auto& t : r.terms) t.coeff = f.div(t.coeff, lead);
    }
    return r;
}

ARelation relation_eq(const Field& f, std::vector<ATerm> lhs, std::vector<ATerm> rhs) {
    for (auto& t : rhs) lhs.push_back({f.neg(t.coeff), t.word});
    return make_relation(f, std::move(lhs));
}

bool arelation_less(const ARelation& a, const ARelation& b) {
    size_t n = std::min(a.terms.size(), b.terms.size());
    for (size_t i = 0; i < n; ++i) {
        if (a.terms[i].word != b.terms[i].word) return aword_less(a.terms[i].word, b.terms[i].word);
        if (a.terms[i].coeff != b.terms[i].coeff) return a.terms[i].coeff < b.terms[i].coeff;
    }
    return a.terms.size() < b.terms.size();
}

const GradeElement* AlgebraPresentation::degree_of(const std::string& gen) const {
    auto it = std::lower_bound(generators.begin(), generators.end(), gen,
                               [](const AGen& g, const std::string& n) { return g.name < n; });
    if (it == generators.end() || it->name != gen) return nullptr;
    return &it->degree;
}

AlgebraPresentation make_algebra_presentation(GradeGroup group, Field field,
                                              std::vector<AGen> gens, std::vector<ARelation> rels,
                                              bool unital) {
    group.validate();
    std::sort(gens.begin(), gens.end(), [](const AGen& a, const AGen& b) { return a.name < b.name; });
    for (size_t i = 0; i + 1 < gens.size(); ++i)
        if (gens[i].name == gens[i + 1].name)
            throw spec_error("duplicate algebra generator '" + gens[i].name + "'");
    for (const auto& g : gens) {
        if (g.name.empty()) throw spec_error("empty generator name");
        g_check(group, g.degree);
    }

    AlgebraPresentation p;
    p.group = std::move(group);
    p.field = field;
    p.generators = std::move(gens);
    p.unital = unital;

    std::vector<ARelation> norm;
    for (auto& r : rels) {
        ARelation nr = make_relation(field, r.terms);
        if (nr.is_trivial()) continue;
        for (const auto& t : nr.terms)
            for (const auto& g : t.word)
                if (!p.degree_of(g)) throw spec_error("relation uses undeclared generator '" + g + "'");
        norm.push_back(std::move(nr));
    }
    std::sort(norm.begin(), norm.end(), arelation_less);
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
    p.relations = std::move(norm);
    return p;
}

GradeElement degree_of_word(const AlgebraPresentation& p, const AWord& w) {
    GradeElement d = g_zero(p.group);
    for (const auto& g : w) {
        const GradeElement* dg = p.degree_of(g);
        if (!dg) throw spec_error("undeclared generator '" + g + "'");
        d = g_add(p.group, d, *dg);
    }
    return d;
}

std::vector<HomogeneityViolation> homogeneity_check(const AlgebraPresentation& p) {
    std::vector<HomogeneityViolation> out;
    for (size_t i = 0; i < p.relations.size(); ++i) {
        const auto& r = p.relations[i];
        if (r.terms.empty()) continue;
        GradeElement d0 = degree_of_word(p, r.terms.front().word);
        for (const auto& t : r.terms) {
            GradeElement d = degree_of_word(p, t.word);
            if (!(d == d0)) {
                out.push_back({i, "relation " + format_arelation(p.field, r) +
                                      " mixes degrees " + format_elem(p.group, d0) + " and " +
                                      format_elem(p.group, d)});
                break;
            }
        }
    }
    return out;
}

RenameReport rename_equal(const AlgebraPresentation& p, const AlgebraPresentation& q,
                          const std::map<std::string, std::string>& gen_map) {
    if (gen_map.size() != p.generators.size() || p.generators.size() != q.generators.size())
        throw spec_error("generator map is not a bijection");
    std::set<std::string> image;
    for (const auto& g : p.generators) {
        auto it = gen_map.find(g.name);
        if (it == gen_map.end()) throw spec_error("map misses generator '" + g.name + "'");
        if (!image.insert(it->second).second) throw spec_error("map is not injective");
        const GradeElement* dq = q.degree_of(it->second);
        if (!dq) throw spec_error("map target '" + it->second + "' not a generator");
        if (!(p.group == q.group) || !(g.degree == *dq))
            throw spec_error("map does not preserve degrees at '" + g.name + "'");
    }
    if (p.field != q.field) throw spec_error("presentations over different fields");

    auto rename_word = [&](const AWord& w) {
        AWord out;
        out.reserve(w.size());
        for (const auto& g : w) out.push_back(gen_map.at(g));
        return out;
    };
    std::vector<ARelation> renamed;
    for (const auto& r : p.relations) {
        std::vector<ATerm> ts;
        for (const auto& t : r.terms) ts.push_back({t.coeff, rename_word(t.word)});
        renamed.push_back(make_relation(p.field, std::move(ts)));
    }
    std::sort(renamed.begin(), renamed.end(), arelation_less);

    RenameReport rep;
    rep.equal = renamed == q.relations && p.unital == q.unital;
    if (!rep.equal) {
        std::vector<ARelation> only_p, only_q;
        std::set_difference(renamed.begin(), renamed.end(), q.relations.begin(),
                            q.relations.end(), std::back_inserter(only_p), arelation_less);
        std::set_difference(q.relations.begin(), q.relations.end(), renamed.begin(),
                            renamed.end(), std::back_inserter(only_q), arelation_less);
        for (const auto& r : only_p)
            rep.mismatches.push_back("only lhs: " + format_arelation(p.field, r));
        for (const auto& r : only_q)
            rep.mismatches.push_back("only rhs: " + format_arelation(q.field, r));
        if (p.unital != q.unital) rep.mismatches.push_back("unital flags differ");
    }
    return rep;
}

namespace {

bool match_at(const AWord& w, size_t pos, const AWord& lhs) {
    if (pos + lhs.size() > w.size()) return false;
    for (size_t i = 0; i < lhs.size(); ++i)
        if (w[pos + i] != lhs[i]) return false;
    return true;
}

std::vector<ATerm> apply_at(const Field& f, const ATerm& t, size_t pos, const RewriteRule& rule) {
    std::vector<ATerm> out;
    for (const auto& rt : rule.rhs) {
        AWord w;
        w.insert(w.end(), t.word.begin(), t.word.begin() + pos);
        w.insert(w.end(), rt.word.begin(), rt.word.end());
        w.insert(w.end(), t.word.begin() + pos + rule.lhs.size(), t.word.end());
        out.push_back({f.mul(t.coeff, rt.coeff), std::move(w)});
    }
    return out;
}

// Applies eager rules to fixpoint (they strictly shorten words).
std::vector<ATerm> eager_reduce(const Field& f, std::vector<ATerm> terms,
                                const std::vector<RewriteRule>& rules) {
    std::vector<ATerm> out;
    while (!terms.empty()) {
        ATerm t = std::move(terms.back());
        terms.pop_back();
        bool fired = false;
        for (size_t pos = 0; pos < t.word.size() && !fired; ++pos) {
            for (const auto& rule : rules) {
                if (!rule.eager || !match_at(t.word, pos, rule.lhs)) continue;
                auto next = apply_at(f, t, pos, rule);
                terms.insert(terms.end(), next.begin(), next.end());
                fired = true;
                break;
            }
        }
        if (!fired) out.push_back(std::move(t));
    }
    return out;
}

std::vector<ATerm> merge_terms(const Field& f, const std::vector<ATerm>& terms) {
    ARelation merged;
    { // merge without the leading-coefficient scaling
        std::map<AWord, Rational> acc;
        for (const auto& t : terms) acc[t.word] = f.add(acc.count(t.word) ? acc[t.word] : 0, t.coeff);
        for (auto& [w, c] : acc)
            if (!f.is_zero(c)) merged.terms.push_back({c, w});
    }
    std::sort(merged.terms.begin(), merged.terms.end(),
              [](const ATerm& x, const ATerm& y) { return aword_less(x.word, y.word); });
    return merged.terms;
}

} // namespace

ProveResult bounded_rewrite_prove(const AlgebraPresentation& p, const ARelation& identity,
                                  const std::vector<RewriteRule>& rules, int depth) {
    if (depth < 0) throw spec_error("depth must be non-negative");
    // Every rule must be a presented relation (oriented).
    for (const auto& rule : rules) {
        std::vector<ATerm> ts{{Rational(1), rule.lhs}};
        for (const auto& rt : rule.rhs) ts.push_back({p.field.neg(rt.coeff), rt.word});
        ARelation as_rel = make_relation(p.field, std::move(ts));
        if (!std::binary_search(p.relations.begin(), p.relations.end(), as_rel, arelation_less))
            throw spec_error("rewrite rule is not among the presentation's relations: " +
                             format_aword(rule.lhs));
        if (rule.eager)
            for (const auto& rt : rule.rhs)
                if (rt.word.size() >= rule.lhs.size())
                    throw spec_error("eager rule must strictly shorten words");
    }

    ProveResult res;
    std::vector<ATerm> expr = merge_terms(p.field, eager_reduce(p.field, identity.terms, rules));
    res.states.push_back(expr);

    for (int round = 0; round < depth && !expr.empty(); ++round) {
        std::vector<ATerm> next;
        bool any = false;
        for (const auto& t : expr) {
            bool fired = false;
            for (size_t pos = 0; pos < t.word.size() && !fired; ++pos) {
                for (const auto& rule : rules) {
                    if (rule.eager || !match_at(t.word, pos, rule.lhs)) continue;
                    auto rw = apply_at(p.field, t, pos, rule);
                    next.insert(next.end(), rw.begin(), rw.end());
                    fired = true;
                    any = true;
                    break;
                }
            }
            if (!fired) next.push_back(t);
        }
        expr = merge_terms(p.field, eager_reduce(p.field, std::move(next), rules));
        res.states.push_back(expr);
        res.rounds_used = round + 1;
        if (!any && !expr.empty()) {
            res.note = "no applicable rule";
            return res;
        }
    }
    res.proved = expr.empty();
    if (!res.proved && res.note.empty()) res.note = "depth exhausted";
    return res;
}

std::string format_aword(const AWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (const auto& g : w) {
        if (!s.empty()) s += " ";
        s += g;
    }
    return s;
}

std::string format_arelation(const Field&, const ARelation& r) {
    if (r.terms.empty()) return "0 = 0";
    std::string s;
    for (size_t i = 0; i < r.terms.size(); ++i) {
        const auto& t = r.terms[i];
        Rational c = t.coeff;
        bool neg = c < 0;
        if (i == 0) {
            if (neg) s += "- ";
        } else {
            s += neg ? " - " : " + ";
        }
        Rational a = neg ? Rational(-c) : c;
        if (a != 1 || t.word.empty()) {
            s += rational_to_string(a);
            if (!t.word.empty()) s += " ";
        }
        if (!t.word.empty()) s += format_aword(t.word);
    }
    return s + " = 0";
}

} // namespace gkt
