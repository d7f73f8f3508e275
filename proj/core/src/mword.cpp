#include "gkt/mword.hpp"

#include <algorithm>
#include <set>

namespace gkt {

int word_cmp(const MWord& a, const MWord& b) {
    auto ia = a.terms.begin(), ib = b.terms.begin();
    MKeyLess less;
    for (; ia != a.terms.end() && ib != b.terms.end(); ++ia, ++ib) {
        if (less(ia->first, ib->first)) return -1;
        if (less(ib->first, ia->first)) return 1;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    }
    if (ia != a.terms.end()) return 1;
    if (ib != b.terms.end()) return -1;
    return 0;
}

MWord word_of(const std::string& gen, const GradeElement& shift, std::int64_t mult) {
    MWord w;
    if (mult < 0) throw spec_error("negative multiplicity");
    if (mult > 0) w.terms[{gen, shift}] = mult;
    return w;
}

MWord word_add(const MWord& a, const MWord& b) {
    MWord r = a;
    for (const auto& [k, n] : b.terms) r.terms[k] += n;
    return r;
}

MWord word_scale(const MWord& a, std::int64_t n) {
    if (n < 0) throw spec_error("negative scale");
    MWord r;
    if (n == 0) return r;
    for (const auto& [k, m] : a.terms) r.terms[k] = m * n;
    return r;
}

MWord word_shift(const GradeGroup& g, const MWord& w, const GradeElement& delta) {
    MWord r;
    for (const auto& [k, n] : w.terms) r.terms[{k.gen, g_add(g, k.shift, delta)}] += n;
    return r;
}

bool word_contains(const MWord& w, const MWord& sub) {
    for (const auto& [k, n] : sub.terms) {
        auto it = w.terms.find(k);
        if (it == w.terms.end() || it->second < n) return false;
    }
    return true;
}

MWord word_minus(const MWord& w, const MWord& sub) {
    MWord r = w;
    for (const auto& [k, n] : sub.terms) {
        auto it = r.terms.find(k);
        if (it == r.terms.end() || it->second < n) throw spec_error("word_minus: not a sub-multiset");
        it->second -= n;
        if (it->second == 0) r.terms.erase(it);
    }
    return r;
}

std::int64_t word_len(const MWord& w) {
    std::int64_t n = 0;
    for (const auto& [k, m] : w.terms) n += m;
    return n;
}

MRelation normalize_relation(const GradeGroup& g, const MRelation& r) {
    // Translate so that the least shift over both sides becomes zero.
    const GradeElement* least = nullptr;
    for (const MWord* w : {&r.lhs, &r.rhs})
        for (const auto& [k, n] : w->terms)
            if (!least || g_cmp(k.shift, *least) < 0) least = &k.shift;
    MRelation out = r;
    if (least && !g_is_zero(*least)) {
        GradeElement d = g_neg(g, *least);
        out.lhs = word_shift(g, r.lhs, d);
        out.rhs = word_shift(g, r.rhs, d);
    }
    if (word_cmp(out.rhs, out.lhs) < 0) std::swap(out.lhs, out.rhs);
    return out;
}

MonoidPresentation make_presentation(GradeGroup g, std::vector<std::string> gens,
                                     std::vector<MRelation> rels, std::optional<MWord> unit,
                                     bool allow_zero_sides) {
    g.validate();
    std::sort(gens.begin(), gens.end());
    for (size_t i = 0; i + 1 < gens.size(); ++i)
        if (gens[i] == gens[i + 1]) throw spec_error("duplicate generator '" + gens[i] + "'");
    for (const auto& name : gens)
        if (name.empty()) throw spec_error("empty generator name");

    MonoidPresentation p;
    p.group = std::move(g);
    p.generators = std::move(gens);

    std::vector<MRelation> norm;
    for (const auto& r : rels) {
        if (!allow_zero_sides && (r.lhs.is_zero() || r.rhs.is_zero()))
            throw spec_error("relation side is zero");
        norm.push_back(normalize_relation(p.group, r));
    }
    std::sort(norm.begin(), norm.end(), [](const MRelation& a, const MRelation& b) {
        int c = word_cmp(a.lhs, b.lhs);
        if (c != 0) return c < 0;
        return word_cmp(a.rhs, b.rhs) < 0;
    });
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
    p.relations = std::move(norm);
    p.order_unit = std::move(unit);

    for (const auto& r : p.relations) {
        check_word(p, r.lhs);
        check_word(p, r.rhs);
    }
    if (p.order_unit) check_word(p, *p.order_unit);
    return p;
}

void check_word(const MonoidPresentation& p, const MWord& w) {
    for (const auto& [k, n] : w.terms) {
        if (n <= 0) throw spec_error("non-positive multiplicity stored");
        g_check(p.group, k.shift);
        if (!std::binary_search(p.generators.begin(), p.generators.end(), k.gen))
            throw spec_error("undeclared generator '" + k.gen + "'");
    }
}

MonoidPresentation quotient_presentation(const MonoidPresentation& p,
                                         const std::vector<MRelation>& extra) {
    for (const auto& r : extra) {
        check_word(p, r.lhs);
        check_word(p, r.rhs);
    }
    std::vector<MRelation> rels = p.relations;
    rels.insert(rels.end(), extra.begin(), extra.end());
    return make_presentation(p.group, p.generators, std::move(rels), p.order_unit);
}

bool presentation_equal(const MonoidPresentation& a, const MonoidPresentation& b) {
    MonoidPresentation na = make_presentation(a.group, a.generators, a.relations, a.order_unit);
    MonoidPresentation nb = make_presentation(b.group, b.generators, b.relations, b.order_unit);
    return na == nb;
}

std::string format_word(const GradeGroup& g, const MWord& w) {
    if (w.is_zero()) return "0";
    std::string s;
    for (const auto& [k, n] : w.terms) {
        if (!s.empty()) s += " + ";
        if (n != 1) s += std::to_string(n) + " ";
        s += k.gen;
        if (!g_is_zero(k.shift)) s += format_elem(g, k.shift);
    }
    return s;
}

} // namespace gkt
