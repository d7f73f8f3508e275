#include "gkt/decide.hpp"

#include "gkt/field.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <utility>

namespace gkt {

namespace {

struct WordLess {
    bool operator()(const MWord& a, const MWord& b) const { return word_cmp(a, b) < 0; }
};

using WordSet = std::set<MWord, WordLess>;

// Support box of the free part, one [lo, hi] interval per coordinate.
struct Window {
    std::vector<std::int64_t> lo, hi;
};

Window support_window(const GradeGroup& g, const std::vector<const MWord*>& words,
                      std::int64_t extend) {
    Window w;
    w.lo.assign(g.rank, 0);
    w.hi.assign(g.rank, 0);
    bool seen = false;
    for (const MWord* word : words) {
        for (const auto& [k, n] : word->terms) {
            for (int c = 0; c < g.rank; ++c) {
                if (!seen) {
                    w.lo[c] = w.hi[c] = k.shift.free[c];
                } else {
                    w.lo[c] = std::min(w.lo[c], k.shift.free[c]);
                    w.hi[c] = std::max(w.hi[c], k.shift.free[c]);
                }
            }
            seen = true;
        }
    }
    for (int c = 0; c < g.rank; ++c) {
        w.lo[c] -= extend;
        w.hi[c] += extend;
    }
    return w;
}

// All delta with every key of the relation shifted into the window.
void admissible_shifts(const GradeGroup& g, const Window& win, const MRelation& r,
                       std::vector<GradeElement>& out, std::size_t cap) {
    std::vector<const GradeElement*> keys;
    for (const MWord* w : {&r.lhs, &r.rhs})
        for (const auto& [k, n] : w->terms) keys.push_back(&k.shift);
    if (keys.empty()) return;

    std::vector<std::int64_t> dlo(g.rank), dhi(g.rank);
    for (int c = 0; c < g.rank; ++c) {
        std::int64_t mn = keys[0]->free[c], mx = keys[0]->free[c];
        for (auto* k : keys) {
            mn = std::min(mn, k->free[c]);
            mx = std::max(mx, k->free[c]);
        }
        dlo[c] = win.lo[c] - mn;
        dhi[c] = win.hi[c] - mx;
        if (dlo[c] > dhi[c]) return;
    }

    GradeElement delta = g_zero(g);
    // Odometer over the free box and all torsion residues.
    std::vector<std::int64_t> cursor(g.rank + (int)g.torsion.size(), 0);
    for (int c = 0; c < g.rank; ++c) cursor[c] = dlo[c];
    while (true) {
        for (int c = 0; c < g.rank; ++c) delta.free[c] = cursor[c];
        for (size_t t = 0; t < g.torsion.size(); ++t) delta.residues[t] = cursor[g.rank + t];
        out.push_back(delta);
        if (out.size() > cap) throw spec_error("shift window too large to enumerate");
        int pos = 0;
        for (; pos < (int)cursor.size(); ++pos) {
            std::int64_t limit = pos < g.rank ? dhi[pos] : g.torsion[pos - g.rank] - 1;
            if (cursor[pos] < limit) {
                ++cursor[pos];
                break;
            }
            cursor[pos] = pos < g.rank ? dlo[pos] : 0;
        }
        if (pos == (int)cursor.size()) break;
    }
}

struct Instance {
    MWord from, to;
};

// Instances bucketed by one trigger key of `from`, so expansion only tries
// rewrites whose trigger occurs in the word.
struct InstanceIndex {
    std::vector<Instance> all;
    std::map<MKey, std::vector<std::size_t>, MKeyLess> by_trigger;
    std::vector<std::size_t> zero_from; // instances applicable to every word
};

InstanceIndex relation_instances(const MonoidPresentation& p, const Window& win) {
    InstanceIndex idx;
    for (const auto& r : p.relations) {
        std::vector<GradeElement> deltas;
        admissible_shifts(p.group, win, r, deltas, 1u << 20);
        for (const auto& d : deltas) {
            MWord l = word_shift(p.group, r.lhs, d);
            MWord rr = word_shift(p.group, r.rhs, d);
            if (l == rr) continue;
            idx.all.push_back({l, rr});
            idx.all.push_back({rr, l});
        }
    }
    for (std::size_t i = 0; i < idx.all.size(); ++i) {
        const MWord& from = idx.all[i].from;
        if (from.is_zero())
            idx.zero_from.push_back(i);
        else
            idx.by_trigger[from.terms.begin()->first].push_back(i);
    }
    return idx;
}

struct ClassSearch {
    WordSet visited;
    std::deque<MWord> queue;
    std::vector<const MWord*> members; // stable pointers into visited

    void seed(const MWord& w) {
        auto [it, fresh] = visited.insert(w);
        if (fresh) {
            queue.push_back(w);
            members.push_back(&*it);
        }
    }
};

// Expands one word; returns the fresh neighbours inserted.
std::vector<const MWord*> expand_one(ClassSearch& side, const InstanceIndex& idx,
                                     std::int64_t max_len, std::int64_t& max_len_seen) {
    std::vector<const MWord*> fresh;
    MWord w = side.queue.front();
    side.queue.pop_front();
    auto apply = [&](const Instance& ins) {
        if (!word_contains(w, ins.from)) return;
        MWord next = word_add(word_minus(w, ins.from), ins.to);
        std::int64_t len = word_len(next);
        max_len_seen = std::max(max_len_seen, len);
        if (len > max_len) return;
        auto [it, inserted] = side.visited.insert(std::move(next));
        if (inserted) {
            side.queue.push_back(*it);
            side.members.push_back(&*it);
            fresh.push_back(&*it);
        }
    };
    for (const auto& [k, n] : w.terms) {
        auto it = idx.by_trigger.find(k);
        if (it == idx.by_trigger.end()) continue;
        for (std::size_t i : it->second) apply(idx.all[i]);
    }
    for (std::size_t i : idx.zero_from) apply(idx.all[i]);
    return fresh;
}

// --- graph engine -----------------------------------------------------------

struct GraphRules {
    std::map<std::string, MWord> rhs; // g(0) -> rhs
    bool uniform = false;             // rank-1 torsion-free, all rhs keys at level +1 or -1
    std::int64_t delta0 = 0;
};

GraphRules extract_rules(const MonoidPresentation& p, bool* ok) {
    GraphRules rules;
    auto singleton_gen = [](const MWord& w) -> const MKey* {
        if (w.terms.size() == 1 && w.terms.begin()->second == 1) return &w.terms.begin()->first;
        return nullptr;
    };
    // Each relation must rewrite a single generator occurrence, with at most
    // one relation per generator; orientations are resolved by bipartite
    // matching (a relation whose sides are both singletons can go either way).
    struct Option {
        std::string gen;
        MWord rhs; // already normalized to a rule for gen at shift zero
    };
    std::vector<std::vector<Option>> options;
    for (const auto& r : p.relations) {
        std::vector<Option> opts;
        if (const MKey* k = singleton_gen(r.lhs))
            opts.push_back({k->gen, word_shift(p.group, r.rhs, g_neg(p.group, k->shift))});
        if (const MKey* k = singleton_gen(r.rhs))
            if (opts.empty() || opts.front().gen != k->gen)
                opts.push_back({k->gen, word_shift(p.group, r.lhs, g_neg(p.group, k->shift))});
        if (opts.empty()) {
            *ok = false;
            return rules;
        }
        options.push_back(std::move(opts));
    }
    std::map<std::string, int> matched_to; // generator -> relation index
    std::vector<int> choice(options.size(), -1);
    std::function<bool(int, std::set<int>&)> augment = [&](int rel, std::set<int>& seen) {
        for (int c = 0; c < (int)options[rel].size(); ++c) {
            const std::string& g = options[rel][c].gen;
            auto it = matched_to.find(g);
            if (it == matched_to.end()) {
                matched_to[g] = rel;
                choice[rel] = c;
                return true;
            }
            int other = it->second;
            if (seen.insert(other).second && augment(other, seen)) {
                matched_to[g] = rel;
                choice[rel] = c;
                return true;
            }
        }
        return false;
    };
    for (int rel = 0; rel < (int)options.size(); ++rel) {
        std::set<int> seen{rel};
        if (!augment(rel, seen)) {
            *ok = false;
            return rules;
        }
    }
    for (int rel = 0; rel < (int)options.size(); ++rel)
        rules.rhs[options[rel][choice[rel]].gen] = options[rel][choice[rel]].rhs;
    *ok = true;

    if (p.group.rank == 1 && p.group.torsion.empty()) {
        std::int64_t d = 0;
        bool uniform = true, have = false;
        for (const auto& [g, w] : rules.rhs) {
            for (const auto& [k, n] : w.terms) {
                std::int64_t lvl = k.shift.free[0];
                if (!have) {
                    d = lvl;
                    have = true;
                } else if (lvl != d) {
                    uniform = false;
                }
            }
        }
        if (uniform && have && (d == 1 || d == -1)) {
            rules.uniform = true;
            rules.delta0 = d;
        }
    }
    return rules;
}

bool checked_mul(std::int64_t a, std::int64_t b, std::int64_t& out) {
    return !__builtin_mul_overflow(a, b, &out);
}
bool checked_add(std::int64_t a, std::int64_t b, std::int64_t& out) {
    return !__builtin_add_overflow(a, b, &out);
}

// Expand every regular occurrence below `level` up to exactly `level`.
// Returns false on multiplicity overflow.
bool expand_to_level(const GradeGroup& g, const GraphRules& rules, MWord& w, std::int64_t level) {
    while (true) {
        const MKey* pick = nullptr;
        for (const auto& [k, n] : w.terms) {
            if (!rules.rhs.count(k.gen)) continue;
            if (k.shift.free[0] < level && (!pick || k.shift.free[0] < pick->shift.free[0]))
                pick = &k;
        }
        if (!pick) return true;
        MKey key = *pick;
        std::int64_t mult = w.terms.at(key);
        w.terms.erase(key);
        const MWord& rhs = rules.rhs.at(key.gen);
        for (const auto& [rk, rn] : rhs.terms) {
            std::int64_t add = 0, total = 0;
            if (!checked_mul(mult, rn, add)) return false;
            MKey target{rk.gen, g_add(g, rk.shift, key.shift)};
            auto it = w.terms.find(target);
            std::int64_t cur = it == w.terms.end() ? 0 : it->second;
            if (!checked_add(cur, add, total)) return false;
            w.terms[target] = total;
        }
    }
}

// Exact rank over Q of the substitution matrix (rows: all generators
// reachable as targets plus sinks, cols: regular generators).
bool substitution_injective(const GraphRules& rules) {
    std::vector<std::string> cols;
    for (const auto& [g, w] : rules.rhs) cols.push_back(g);
    std::map<std::string, size_t> row_of;
    for (const auto& [g, w] : rules.rhs)
        for (const auto& [k, n] : w.terms)
            if (!row_of.count(k.gen)) row_of.emplace(k.gen, row_of.size());
    std::vector<std::vector<Rational>> m(row_of.size(), std::vector<Rational>(cols.size(), 0));
    for (size_t c = 0; c < cols.size(); ++c)
        for (const auto& [k, n] : rules.rhs.at(cols[c]).terms) m[row_of[k.gen]][c] += n;

    size_t rank = 0;
    for (size_t col = 0; col < cols.size() && rank < m.size(); ++col) {
        size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rational f = m[r][col] / m[rank][col];
            for (size_t c2 = col; c2 < cols.size(); ++c2) m[r][c2] -= f * m[rank][c2];
        }
        ++rank;
    }
    return rank == cols.size();
}

std::int64_t key_mult(const MWord& w, const MKey& k) {
    auto it = w.terms.find(k);
    return it == w.terms.end() ? std::int64_t(0) : it->second;
}

// Sink occurrences at levels <= level never change once the live front has
// passed them; a difference there is permanent.
bool frozen_sink_difference(const GraphRules& rules, const MWord& a, const MWord& b,
                            std::int64_t level) {
    for (const MWord* w : {&a, &b})
        for (const auto& [k, n] : w->terms)
            if (!rules.rhs.count(k.gen) && k.shift.free[0] <= level &&
                key_mult(a, k) != key_mult(b, k))
                return true;
    return false;
}

// Sink occurrences above the live front can still absorb contributions.
bool pending_sinks_equal(const GraphRules& rules, const MWord& a, const MWord& b,
                         std::int64_t level) {
    for (const MWord* w : {&a, &b})
        for (const auto& [k, n] : w->terms)
            if (!rules.rhs.count(k.gen) && k.shift.free[0] > level &&
                key_mult(a, k) != key_mult(b, k))
                return false;
    return true;
}

bool has_live_keys(const GraphRules& rules, const MWord& w) {
    for (const auto& [k, n] : w.terms)
        if (rules.rhs.count(k.gen)) return true;
    return false;
}

Decision graph_decide_uniform(const MonoidPresentation& p, const GraphRules& rules_in,
                              const MWord& a_in, const MWord& b_in, std::int64_t depth) {
    GraphRules rules = rules_in;
    MWord a = a_in, b = b_in;
    if (rules.delta0 == -1) {
        // Mirror levels so expansion always ascends.
        auto mirror = [&](const MWord& w) {
            MWord out;
            for (const auto& [k, n] : w.terms) {
                GradeElement s = k.shift;
                s.free[0] = -s.free[0];
                out.terms[{k.gen, s}] += n;
            }
            return out;
        };
        for (auto& [g, w] : rules.rhs) w = mirror(w);
        a = mirror(a);
        b = mirror(b);
        rules.delta0 = 1;
    }

    bool any_regular = false;
    std::int64_t m_start = 0;
    for (const MWord* w : {&a, &b}) {
        for (const auto& [k, n] : w->terms) {
            if (!rules.rhs.count(k.gen)) continue;
            std::int64_t lvl = k.shift.free[0];
            m_start = any_regular ? std::max(m_start, lvl) : lvl;
            any_regular = true;
        }
    }
    if (!any_regular)
        return {a == b ? Verdict::Equal : Verdict::NotEqual, 0, std::max(word_len(a), word_len(b)),
                "sink-only words"};

    bool injective = substitution_injective(rules);
    MWord ea = a, eb = b;
    Decision d;
    for (std::int64_t step = 0; step <= depth; ++step) {
        std::int64_t level = m_start + step;
        if (!expand_to_level(p.group, rules, ea, level) ||
            !expand_to_level(p.group, rules, eb, level)) {
            d.verdict = Verdict::Unknown;
            d.note = "multiplicity overflow during level expansion";
            return d;
        }
        d.states_explored = step + 1;
        d.max_len_reached = std::max({d.max_len_reached, word_len(ea), word_len(eb)});
        if (ea == eb) {
            d.verdict = Verdict::Equal;
            d.note = "level expansions meet at level " + std::to_string(level);
            return d;
        }
        if (!has_live_keys(rules, ea) && !has_live_keys(rules, eb)) {
            d.verdict = Verdict::NotEqual;
            d.note = "distinct rigid words at level " + std::to_string(level);
            return d;
        }
        if (frozen_sink_difference(rules, ea, eb, level)) {
            d.verdict = Verdict::NotEqual;
            d.note = "frozen sink multiplicities differ at level " + std::to_string(level);
            return d;
        }
        if (injective && pending_sinks_equal(rules, ea, eb, level)) {
            d.verdict = Verdict::NotEqual;
            d.note = "level expansions differ and the substitution is injective";
            return d;
        }
    }
    d.verdict = Verdict::Unknown;
    d.note = "depth exhausted";
    return d;
}

Decision graph_decide_bfs(const MonoidPresentation& p, const GraphRules& rules, const MWord& a,
                          const MWord& b, std::int64_t depth) {
    const std::size_t state_cap = 200000;
    struct Side {
        WordSet visited;
        std::deque<std::pair<MWord, std::int64_t>> queue;
        bool truncated = false;
    } sa, sb;
    sa.visited.insert(a);
    sa.queue.push_back({a, 0});
    sb.visited.insert(b);
    sb.queue.push_back({b, 0});

    Decision d;
    auto expand = [&](Side& side, const Side& other) -> bool {
        auto [w, dep] = side.queue.front();
        side.queue.pop_front();
        if (dep >= depth) {
            side.truncated = true;
            return false;
        }
        for (const auto& [k, n] : w.terms) {
            auto it = rules.rhs.find(k.gen);
            if (it == rules.rhs.end()) continue;
            MWord next = word_minus(w, word_of(k.gen, k.shift));
            next = word_add(next, word_shift(p.group, it->second, k.shift));
            d.max_len_reached = std::max(d.max_len_reached, word_len(next));
            if (side.visited.insert(next).second) {
                if (other.visited.count(next)) return true;
                side.queue.push_back({next, dep + 1});
            }
        }
        return false;
    };

    while (!sa.queue.empty() || !sb.queue.empty()) {
        d.states_explored = sa.visited.size() + sb.visited.size();
        if (d.states_explored > state_cap) {
            d.verdict = Verdict::Unknown;
            d.note = "state cap exceeded";
            return d;
        }
        Side& pick = sb.queue.empty() || (!sa.queue.empty() && sa.queue.size() <= sb.queue.size())
                         ? sa
                         : sb;
        Side& other = &pick == &sa ? sb : sa;
        if (expand(pick, other)) {
            d.verdict = Verdict::Equal;
            d.states_explored = sa.visited.size() + sb.visited.size();
            return d;
        }
    }
    d.states_explored = sa.visited.size() + sb.visited.size();
    if (sa.truncated || sb.truncated) {
        d.verdict = Verdict::Unknown;
        d.note = "depth exhausted";
    } else {
        d.verdict = Verdict::NotEqual;
        d.note = "reduct sets closed and disjoint";
    }
    return d;
}

} // namespace

void Budget::validate() const {
    if (max_len <= 0 || max_states <= 0 || shift_window <= 0 || depth <= 0)
        throw spec_error("budget fields must be positive");
}

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Equal: return "Equal";
    case Verdict::NotEqual: return "NotEqual";
    default: return "Unknown";
    }
}

Decision closure_decide(const MonoidPresentation& p, const MWord& a, const MWord& b,
                        const Budget& budget) {
    budget.validate();
    check_word(p, a);
    check_word(p, b);
    if (a == b) return {Verdict::Equal, 0, word_len(a), "identical words"};

    Window win = support_window(p.group, {&a, &b}, budget.shift_window);
    InstanceIndex inst = relation_instances(p, win);

    ClassSearch ca, cb;
    ca.seed(a);
    cb.seed(b);

    Decision d;
    while (!ca.queue.empty() || !cb.queue.empty()) {
        d.states_explored = ca.visited.size() + cb.visited.size();
        if ((std::int64_t)d.states_explored > budget.max_states) {
            d.verdict = Verdict::Unknown;
            d.note = "max_states exceeded";
            return d;
        }
        ClassSearch& side =
            cb.queue.empty() || (!ca.queue.empty() && ca.queue.size() <= cb.queue.size()) ? ca : cb;
        ClassSearch& other = &side == &ca ? cb : ca;
        for (const MWord* w : expand_one(side, inst, budget.max_len, d.max_len_reached)) {
            if (other.visited.count(*w)) {
                d.verdict = Verdict::Equal;
                d.states_explored = ca.visited.size() + cb.visited.size();
                return d;
            }
        }
    }
    d.states_explored = ca.visited.size() + cb.visited.size();
    d.verdict = Verdict::NotEqual;
    d.note = "classes exhausted within window";
    return d;
}

bool is_graph_shaped(const MonoidPresentation& p) {
    bool ok = false;
    extract_rules(p, &ok);
    return ok;
}

Decision graph_decide(const MonoidPresentation& p, const MWord& a, const MWord& b,
                      std::int64_t depth) {
    if (depth <= 0) throw spec_error("depth must be positive");
    check_word(p, a);
    check_word(p, b);
    bool ok = false;
    GraphRules rules = extract_rules(p, &ok);
    if (!ok) throw spec_error("presentation is not graph-shaped");
    if (a == b) return {Verdict::Equal, 0, word_len(a), "identical words"};
    if (rules.uniform) return graph_decide_uniform(p, rules, a, b, depth);
    return graph_decide_bfs(p, rules, a, b, depth);
}

Decision leq_decide(const MonoidPresentation& p, const MWord& a, const MWord& b,
                    const Budget& budget) {
    budget.validate();
    check_word(p, a);
    check_word(p, b);
    if (word_contains(b, a)) return {Verdict::Equal, 0, word_len(b), "direct sub-multiset"};

    Window win = support_window(p.group, {&a, &b}, budget.shift_window);
    InstanceIndex inst = relation_instances(p, win);

    ClassSearch ca, cb;
    ca.seed(a);
    cb.seed(b);

    Decision d;
    std::uint64_t pair_checks = 0;
    const std::uint64_t pair_cap = 50'000'000;
    auto crosses = [&](const MWord& wa, const MWord& wb) {
        ++pair_checks;
        return word_contains(wb, wa);
    };

    while (!ca.queue.empty() || !cb.queue.empty()) {
        d.states_explored = ca.visited.size() + cb.visited.size();
        if ((std::int64_t)d.states_explored > budget.max_states || pair_checks > pair_cap) {
            d.verdict = Verdict::Unknown;
            d.note = pair_checks > pair_cap ? "pair-check budget exceeded" : "max_states exceeded";
            return d;
        }
        ClassSearch& side =
            cb.queue.empty() || (!ca.queue.empty() && ca.queue.size() <= cb.queue.size()) ? ca : cb;
        bool side_is_a = &side == &ca;
        for (const MWord* w : expand_one(side, inst, budget.max_len, d.max_len_reached)) {
            const auto& others = side_is_a ? cb.members : ca.members;
            for (const MWord* o : others) {
                bool hit = side_is_a ? crosses(*w, *o) : crosses(*o, *w);
                if (hit) {
                    d.verdict = Verdict::Equal;
                    d.states_explored = ca.visited.size() + cb.visited.size();
                    return d;
                }
            }
        }
    }
    d.states_explored = ca.visited.size() + cb.visited.size();
    d.verdict = Verdict::NotEqual;
    d.note = "classes exhausted within window";
    return d;
}

namespace {

// Window shifts ordered by max |free coordinate|, then lexicographically.
std::vector<GradeElement> window_shifts(const GradeGroup& g, std::int64_t radius) {
    std::vector<GradeElement> out;
    GradeElement e = g_zero(g);
    std::vector<std::int64_t> cursor(g.rank + (int)g.torsion.size(), 0);
    for (int c = 0; c < g.rank; ++c) cursor[c] = -radius;
    while (true) {
        for (int c = 0; c < g.rank; ++c) e.free[c] = cursor[c];
        for (size_t t = 0; t < g.torsion.size(); ++t) e.residues[t] = cursor[g.rank + t];
        out.push_back(e);
        int pos = 0;
        for (; pos < (int)cursor.size(); ++pos) {
            std::int64_t limit = pos < g.rank ? radius : g.torsion[pos - g.rank] - 1;
            if (cursor[pos] < limit) {
                ++cursor[pos];
                break;
            }
            cursor[pos] = pos < g.rank ? -radius : 0;
        }
        if (pos == (int)cursor.size()) break;
    }
    std::sort(out.begin(), out.end(), [](const GradeElement& x, const GradeElement& y) {
        auto mag = [](const GradeElement& v) {
            std::int64_t m = 0;
            for (auto c : v.free) m = std::max(m, c < 0 ? -c : c);
            return m;
        };
        std::int64_t mx = mag(x), my = mag(y);
        if (mx != my) return mx < my;
        return g_cmp(x, y) < 0;
    });
    return out;
}

std::vector<Decision> order_unit_impl(const MonoidPresentation& p, const MWord& i,
                                      const std::vector<MWord>& probes, const Budget& budget,
                                      bool strong) {
    budget.validate();
    check_word(p, i);
    if (probes.empty()) throw spec_error("probes must be nonempty");

    std::vector<GradeElement> shifts =
        strong ? std::vector<GradeElement>{g_zero(p.group)} : window_shifts(p.group, budget.shift_window);
    std::int64_t ilen = std::max<std::int64_t>(1, word_len(i));
    std::int64_t t_max = std::clamp<std::int64_t>(budget.max_len / ilen, 1, 8);
    const std::size_t candidate_cap = 4096;
    // Each candidate only needs short witnesses; keep the per-candidate
    // search from exhausting huge congruence classes. A cheap first pass
    // covers all candidates before any deep search runs.
    Budget per = budget;
    per.max_len = std::min<std::int64_t>(budget.max_len, 32);
    per.max_states = std::min<std::int64_t>(budget.max_states, 25000);
    Budget quick = per;
    quick.max_states = std::min<std::int64_t>(per.max_states, 2000);

    std::vector<Decision> out;
    for (const MWord& m : probes) {
        check_word(p, m);
        if (m.is_zero()) {
            out.push_back({Verdict::Equal, 0, 0, "zero probe"});
            continue;
        }
        bool unknown_seen = false;
        Decision best{Verdict::NotEqual, 0, 0, "no shift multiset within budget"};
        std::size_t tried = 0;
        std::vector<std::pair<std::int64_t, MWord>> pending; // needs the deep pass
        // Multisets of shifts, size ascending, nondecreasing index tuples.
        for (std::int64_t t = 1; t <= t_max && best.verdict != Verdict::Equal; ++t) {
            std::vector<std::size_t> idx(t, 0);
            while (true) {
                if (++tried > candidate_cap) {
                    unknown_seen = true;
                    break;
                }
                MWord sum;
                for (auto id : idx) sum = word_add(sum, word_shift(p.group, i, shifts[id]));
                Decision d = leq_decide(p, m, sum, quick);
                best.states_explored += d.states_explored;
                best.max_len_reached = std::max(best.max_len_reached, d.max_len_reached);
                if (d.verdict == Verdict::Equal) {
                    best.verdict = Verdict::Equal;
                    best.note = "bounded above by " + std::to_string(t) + " shifted copies";
                    break;
                }
                if (d.verdict == Verdict::Unknown) pending.emplace_back(t, std::move(sum));
                int pos = t - 1;
                while (pos >= 0 && idx[pos] == shifts.size() - 1) --pos;
                if (pos < 0) break;
                std::size_t v = ++idx[pos];
                for (int q = pos + 1; q < t; ++q) idx[q] = v;
            }
            if (tried > candidate_cap) break;
        }
        for (auto& [t, sum] : pending) {
            if (best.verdict == Verdict::Equal) break;
            Decision d = leq_decide(p, m, sum, per);
            best.states_explored += d.states_explored;
            best.max_len_reached = std::max(best.max_len_reached, d.max_len_reached);
            if (d.verdict == Verdict::Equal) {
                best.verdict = Verdict::Equal;
                best.note = "bounded above by " + std::to_string(t) + " shifted copies";
            } else if (d.verdict == Verdict::Unknown) {
                unknown_seen = true;
            }
        }
        if (best.verdict != Verdict::Equal && unknown_seen) {
            best.verdict = Verdict::Unknown;
            best.note = "candidate or search budget exhausted";
        }
        out.push_back(best);
    }
    return out;
}

} // namespace

std::vector<Decision> order_unit_check(const MonoidPresentation& p, const MWord& i,
                                       const std::vector<MWord>& probes, const Budget& budget) {
    return order_unit_impl(p, i, probes, budget, false);
}

std::vector<Decision> strong_order_unit_check(const MonoidPresentation& p, const MWord& i,
                                              const std::vector<MWord>& probes,
                                              const Budget& budget) {
    return order_unit_impl(p, i, probes, budget, true);
}

Decision invariant_order_unit_check(const MonoidPresentation& p, const MWord& i,
                                    const Budget& budget) {
    budget.validate();
    check_word(p, i);
    const bool graph = is_graph_shaped(p);
    Decision acc{Verdict::Equal, 0, 0, "invariant under all group generators"};
    for (const auto& gamma : group_generators(p.group)) {
        MWord shifted = word_shift(p.group, i, gamma);
        Decision d = graph ? graph_decide(p, shifted, i, budget.depth)
                           : closure_decide(p, shifted, i, budget);
        acc.states_explored += d.states_explored;
        acc.max_len_reached = std::max(acc.max_len_reached, d.max_len_reached);
        if (d.verdict == Verdict::NotEqual) {
            acc.verdict = Verdict::NotEqual;
            acc.note = "not invariant under shift by " + format_elem(p.group, gamma);
            return acc;
        }
        if (d.verdict == Verdict::Unknown) {
            acc.verdict = Verdict::Unknown;
            acc.note = "undecided under shift by " + format_elem(p.group, gamma);
        }
    }
    return acc;
}

} // namespace gkt
