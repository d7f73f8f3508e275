#ifndef GKT_ALGPRES_HPP
#define GKT_ALGPRES_HPP

#include "gkt/field.hpp"
#include "gkt/grade.hpp"

#include <map>
#include <string>
#include <vector>

namespace gkt {

/// Generator of a graded algebra presentation.
struct AGen {
    std::string name;
    GradeElement degree;

    bool operator==(const AGen&) const = default;
};

/// A word is a finite product of generators; the empty word is 1.
using AWord = std::vector<std::string>;

/// Length-lexicographic order on words (length first, then names).
bool aword_less(const AWord& a, const AWord& b);

struct ATerm {
    Rational coeff;
    AWord word;

    bool operator==(const ATerm&) const = default;
};

/// Relation sum(terms) = 0, normalized: like words merged, zero terms
/// dropped, terms sorted leading-first, leading coefficient 1.
struct ARelation {
    std::vector<ATerm> terms;

    bool is_trivial() const { return terms.empty(); }
    bool operator==(const ARelation&) const = default;
};

ARelation make_relation(const Field& f, std::vector<ATerm> terms);
/// Convenience: lhs - rhs = 0.
ARelation relation_eq(const Field& f, std::vector<ATerm> lhs, std::vector<ATerm> rhs);
bool arelation_less(const ARelation& a, const ARelation& b);

struct AlgebraPresentation {
    GradeGroup group;
    Field field;
    std::vector<AGen> generators; // sorted by name
    std::vector<ARelation> relations;
    bool unital = true;

    const GradeElement* degree_of(const std::string& gen) const;
    bool operator==(const AlgebraPresentation&) const = default;
};

AlgebraPresentation make_algebra_presentation(GradeGroup group, Field field,
                                              std::vector<AGen> gens,
                                              std::vector<ARelation> rels, bool unital);

GradeElement degree_of_word(const AlgebraPresentation& p, const AWord& w);

struct HomogeneityViolation {
    std::size_t relation_index;
    std::string message;
};

/// Empty iff every relation's words share one degree.
std::vector<HomogeneityViolation> homogeneity_check(const AlgebraPresentation& p);

struct RenameReport {
    bool equal = false;
    std::vector<std::string> mismatches; // relations present on one side only
};

/// Syntactic equality of presentations under a degree-preserving generator
/// bijection; throws on a non-bijective or degree-breaking map.
RenameReport rename_equal(const AlgebraPresentation& p, const AlgebraPresentation& q,
                          const std::map<std::string, std::string>& gen_map);

/// Oriented rewrite rule: a single-word left side replaced by a linear
/// combination. Eager rules must strictly shorten words; they are applied to
/// fixpoint during normalization (base-ring product collapses). Non-eager
/// rules fire once per term per round.
struct RewriteRule {
    AWord lhs;
    std::vector<ATerm> rhs;
    bool eager = false;
};

struct ProveResult {
    bool proved = false;
    int rounds_used = 0;
    std::vector<std::vector<ATerm>> states; // expression after each round
    std::string note;
};

/// Reduces identity's terms to zero using the rules, at most `depth` parallel
/// rounds. Every rule must match a relation of p; Proved implies the identity
/// lies in the two-sided ideal generated by the relations.
ProveResult bounded_rewrite_prove(const AlgebraPresentation& p, const ARelation& identity,
                                  const std::vector<RewriteRule>& rules, int depth);

std::string format_aword(const AWord& w);
std::string format_arelation(const Field& f, const ARelation& r);

} // namespace gkt

#endif
