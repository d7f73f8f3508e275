#include "gkt/vmonoid.hpp"

#include "gkt/hyperlpa.hpp"

#include <algorithm>

namespace gkt {

MWord spec_word(const ProjectiveSpec& p) {
    MWord w;
    for (const auto& [label, shift] : p.summands) w = word_add(w, word_of(label, shift));
    return w;
}

ProjectiveSpec spec_from_word(const MWord& w) {
    ProjectiveSpec p;
    for (const auto& [k, n] : w.terms)
        for (std::int64_t c = 0; c < n; ++c) p.summands.emplace_back(k.gen, k.shift);
    return p;
}

MonoidPresentation vgr_quotient(const MonoidPresentation& pres, const ProjectiveSpec& p,
                                const ProjectiveSpec& q) {
    if (p.is_zero() || q.is_zero())
        throw spec_error("projective specs must be nonzero");
    MWord wp = spec_word(p), wq = spec_word(q);
    check_word(pres, wp);
    check_word(pres, wq);
    return quotient_presentation(pres, {{wp, wq}});
}

std::pair<MonoidPresentation, std::pair<std::string, std::string>> vgr_adjoin_split(
    const MonoidPresentation& pres, const ProjectiveSpec& p) {
    if (p.is_zero()) throw spec_error("projective spec must be nonzero");
    MWord wp = spec_word(p);
    check_word(pres, wp);

    auto used = [&](const std::string& n) {
        return std::binary_search(pres.generators.begin(), pres.generators.end(), n);
    };
    int k = 1;
    while (used("P" + std::to_string(k)) || used("P" + std::to_string(k + 1))) ++k;
    std::string p1 = "P" + std::to_string(k), p2 = "P" + std::to_string(k + 1);

    std::vector<std::string> gens = pres.generators;
    gens.push_back(p1);
    gens.push_back(p2);
    std::vector<MRelation> rels = pres.relations;
    rels.push_back({wp, word_add(word_of(p1, g_zero(pres.group)), word_of(p2, g_zero(pres.group)))});
    return {make_presentation(pres.group, std::move(gens), std::move(rels), pres.order_unit),
            {p1, p2}};
}

RealizeResult realize(const MonoidPresentation& m, const Field& field) {
    MWord expected_unit;
    for (const auto& g : m.generators)
        expected_unit = word_add(expected_unit, word_of(g, g_zero(m.group)));
    if (m.generators.empty()) throw spec_error("realize requires at least one generator");
    if (!m.order_unit)
        throw spec_error("realize requires a distinguished order unit equal to the sum of all "
                         "generators; none is declared");
    if (!(*m.order_unit == expected_unit))
        throw spec_error("realize requires the order unit to be the sum of all generators at "
                         "shift zero; got " +
                         format_word(m.group, *m.order_unit));
    for (const auto& r : m.relations)
        if (r.lhs.is_zero() || r.rhs.is_zero())
            throw spec_error("realize requires every relation side nonzero (conicality witness)");

    SemisimpleRing ring{m.generators, field};
    BergmanData data;
    data.group = m.group;
    data.ring = ring;
    std::size_t idx = 0;
    for (const auto& r : m.relations) {
        ++idx;
        DiagonalIdempotent de, df;
        de.slots = spec_from_word(r.lhs).summands;
        df.slots = spec_from_word(r.rhs).summands;
        data.pairs.push_back({"r" + std::to_string(idx),
                              diagonal_idempotent(m.group, ring, de),
                              diagonal_idempotent(m.group, ring, df)});
    }

    RealizeResult out;
    BergmanToHypergraph bh = bergman_to_hypergraph(data);
    out.hypergraph = std::move(bh.hypergraph);
    out.weights = std::move(bh.weights);
    out.reproduced = hyper_vgr_presentation(out.hypergraph, out.weights);
    out.verified = presentation_equal(out.reproduced, m);
    out.message = out.verified
                      ? "graded V-monoid of the realized hypergraph reproduces the input"
                      : "round-trip mismatch: the realized hypergraph presents a different monoid";
    return out;
}

GradingReport grading_structure_check(const Hypergraph& h, const WeightMap& w,
                                      const Budget& budget) {
    MonoidPresentation pres = hyper_vgr_presentation(h, w);
    const MWord unit = *pres.order_unit;

    GradingReport rep;
    std::vector<GradeElement> gens = group_generators(pres.group);
    if (gens.empty()) {
        rep.strongly_graded = {Verdict::Equal, 0, 0, "trivial grade group"};
    } else {
        std::vector<MWord> probes;
        for (const auto& v : h.vertices)
            for (const auto& gamma : gens) {
                probes.push_back(word_of(v, gamma));
                probes.push_back(word_of(v, g_neg(pres.group, gamma)));
            }
        std::vector<Decision> per = strong_order_unit_check(pres, unit, probes, budget);
        Decision acc{Verdict::Equal, 0, 0, "all shifted vertex probes bounded by copies of the unit"};
        for (std::size_t i = 0; i < per.size(); ++i) {
            acc.states_explored += per[i].states_explored;
            acc.max_len_reached = std::max(acc.max_len_reached, per[i].max_len_reached);
            if (per[i].verdict == Verdict::NotEqual && acc.verdict == Verdict::Equal) {
                acc.verdict = Verdict::NotEqual;
                acc.note = "probe " + format_word(pres.group, probes[i]) +
                           " is not bounded by unshifted copies of the unit";
            } else if (per[i].verdict == Verdict::Unknown && acc.verdict == Verdict::Equal) {
                acc.verdict = Verdict::Unknown;
                acc.note = "undecided probe " + format_word(pres.group, probes[i]);
            }
        }
        rep.strongly_graded = acc;
    }
    rep.crossed_product = invariant_order_unit_check(pres, unit, budget);
    return rep;
}

namespace {

// Candidate words over F's vertices: support size ascending, then support
// subsets in key order (vertex name, |shift|, shift sign), then coefficient
// vectors lexicographically.
std::vector<MWord> candidate_words(const Graph& f, const HomBounds& b) {
    GradeGroup z = GradeGroup::integers();
    std::vector<std::string> vs = f.vertices;
    std::sort(vs.begin(), vs.end());
    std::vector<MKey> keys;
    for (const auto& v : vs) {
        std::vector<std::int64_t> shifts{0};
        for (std::int64_t s = 1; s <= b.shift_radius; ++s) {
            shifts.push_back(s);
            shifts.push_back(-s);
        }
        for (auto s : shifts) keys.push_back({v, g_int(z, s)});
    }
    std::stable_sort(keys.begin(), keys.end(), [](const MKey& x, const MKey& y) {
        if (x.gen != y.gen) return x.gen < y.gen;
        std::int64_t ax = std::abs(x.shift.free[0]), ay = std::abs(y.shift.free[0]);
        if (ax != ay) return ax < ay;
        return x.shift.free[0] > y.shift.free[0]; // +s before -s
    });

    std::vector<MWord> out;
    out.push_back(MWord{}); // the zero word
    std::int64_t smax = std::min<std::int64_t>(b.max_support, (std::int64_t)keys.size());
    for (std::int64_t size = 1; size <= smax; ++size) {
        std::vector<std::size_t> sel(size);
        for (std::int64_t i = 0; i < size; ++i) sel[i] = i;
        while (true) {
            std::vector<std::int64_t> coeff(size, 1);
            while (true) {
                MWord w;
                for (std::int64_t i = 0; i < size; ++i) w.terms[keys[sel[i]]] = coeff[i];
                out.push_back(std::move(w));
                int pos = (int)size - 1;
                while (pos >= 0 && coeff[pos] == b.max_coeff) --pos;
                if (pos < 0) break;
                ++coeff[pos];
                for (int q = pos + 1; q < size; ++q) coeff[q] = 1;
            }
            int pos = (int)size - 1;
            while (pos >= 0 && sel[pos] == keys.size() - (size - pos)) --pos;
            if (pos < 0) break;
            ++sel[pos];
            for (int q = pos + 1; q < (int)size; ++q) sel[q] = sel[q - 1] + 1;
        }
    }
    return out;
}

} // namespace

std::optional<HomCertificate> hom_search(const Graph& e, const Graph& f, const HomBounds& bounds,
                                         bool require_pointed, std::int64_t depth) {
    if (bounds.max_coeff <= 0 || bounds.shift_radius < 0 || bounds.max_support < 0)
        throw spec_error("bounds must be positive");
    e.validate();
    f.validate();
    MonoidPresentation te = talented_presentation(e);
    MonoidPresentation tf = talented_presentation(f);
    GradeGroup z = GradeGroup::integers();

    std::vector<std::string> evs = e.vertices;
    std::sort(evs.begin(), evs.end());
    std::vector<MWord> candidates = candidate_words(f, bounds);

    MWord unit_f = *tf.order_unit;
    std::vector<std::size_t> pick(evs.size(), 0);

    while (true) {
        std::map<std::string, MWord> phi;
        for (std::size_t i = 0; i < evs.size(); ++i) phi[evs[i]] = candidates[pick[i]];

        HomCertificate cert;
        cert.assignment = phi;
        bool ok = true;
        for (const auto& v : e.regular_vertices()) {
            MWord lhs = phi[v];
            MWord rhs;
            for (const Edge* ed : e.out_edges(v))
                rhs = word_add(rhs, word_shift(z, phi[ed->dst], g_int(z, 1)));
            Decision d = graph_decide(tf, lhs, rhs, depth);
            cert.transcript.push_back({v, lhs, rhs, d});
            if (d.verdict != Verdict::Equal) {
                ok = false;
                break;
            }
        }
        if (ok && require_pointed) {
            MWord image;
            for (const auto& [v, w] : phi) image = word_add(image, w);
            Decision d = graph_decide(tf, image, unit_f, depth);
            cert.transcript.push_back({"unit", image, unit_f, d});
            cert.pointed = d.verdict == Verdict::Equal;
            ok = cert.pointed;
        } else if (ok) {
            cert.pointed = false;
        }
        if (ok) {
            cert.nonvanishing = true;
            for (const auto& [v, w] : phi)
                if (w.is_zero()) cert.nonvanishing = false;
            return cert;
        }

        std::size_t pos = 0;
        for (; pos < pick.size(); ++pos) {
            if (pick[pos] + 1 < candidates.size()) {
                ++pick[pos];
                break;
            }
            pick[pos] = 0;
        }
        if (pos == pick.size()) return std::nullopt;
    }
}

} // namespace gkt
