#ifndef GKT_MWORD_HPP
#define GKT_MWORD_HPP

#include "gkt/grade.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gkt {

/// Key of a free Gamma-monoid term: a generator at a grade shift.
struct MKey {
    std::string gen;
    GradeElement shift;

    bool operator==(const MKey&) const = default;
};

struct MKeyLess {
    bool operator()(const MKey& a, const MKey& b) const {
        if (a.gen != b.gen) return a.gen < b.gen;
        return g_cmp(a.shift, b.shift) < 0;
    }
};

/// Element of a free Gamma-monoid: finite multiset of keys.
/// The map keeps keys in canonical order; multiplicities are positive.
struct MWord {
    std::map<MKey, std::int64_t, MKeyLess> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const MWord&) const = default;
};

/// -1/0/1 lexicographic comparison over the canonical term sequences.
int word_cmp(const MWord& a, const MWord& b);

MWord word_of(const std::string& gen, const GradeElement& shift, std::int64_t mult = 1);
MWord word_add(const MWord& a, const MWord& b);
MWord word_scale(const MWord& a, std::int64_t n);
MWord word_shift(const GradeGroup& g, const MWord& w, const GradeElement& delta);
bool word_contains(const MWord& w, const MWord& sub);
MWord word_minus(const MWord& w, const MWord& sub); // requires word_contains(w, sub)
std::int64_t word_len(const MWord& w);              // total multiplicity

/// Shift-closed relation, stored as a canonically normalized unordered pair.
struct MRelation {
    MWord lhs;
    MWord rhs;

    bool operator==(const MRelation&) const = default;
};

/// Canonical form: translate so the least key shift becomes zero, then put
/// the lexicographically smaller side first.
MRelation normalize_relation(const GradeGroup& g, const MRelation& r);

struct MonoidPresentation {
    GradeGroup group;
    std::vector<std::string> generators; // sorted, unique
    std::vector<MRelation> relations;
    std::optional<MWord> order_unit;

    bool operator==(const MonoidPresentation&) const = default;
};

MonoidPresentation make_presentation(GradeGroup g, std::vector<std::string> gens,
                                     std::vector<MRelation> rels,
                                     std::optional<MWord> unit = std::nullopt,
                                     bool allow_zero_sides = true);

/// Checks that every key of w names a declared generator and a valid shift.
void check_word(const MonoidPresentation& p, const MWord& w);

/// Appends extra relations (deduplicated, normalized).
MonoidPresentation quotient_presentation(const MonoidPresentation& p,
                                         const std::vector<MRelation>& extra);

/// Structural equality after normalizing and sorting relations.
bool presentation_equal(const MonoidPresentation& a, const MonoidPresentation& b);

std::string format_word(const GradeGroup& g, const MWord& w);

} // namespace gkt

#endif
