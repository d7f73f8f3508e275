#ifndef GKT_VMONOID_HPP
#define GKT_VMONOID_HPP

#include "gkt/bergman.hpp"
#include "gkt/decide.hpp"
#include "gkt/hypergraph.hpp"
#include "gkt/mword.hpp"

#include <optional>

namespace gkt {

/// A direct sum of shifted one-component projectives, kept as an ordered
/// slot list (component label, shift).
struct ProjectiveSpec {
    std::vector<std::pair<std::string, GradeElement>> summands;

    bool is_zero() const { return summands.empty(); }
    bool operator==(const ProjectiveSpec&) const = default;
};

/// The monoid word of a spec: each slot contributes one occurrence.
MWord spec_word(const ProjectiveSpec& p);

/// Expands a word into a spec: term n*g(s) contributes n slots (g, s), in
/// canonical word order.
ProjectiveSpec spec_from_word(const MWord& w);

/// Appends the shift-closed relation word(P) = word(Q).
MonoidPresentation vgr_quotient(const MonoidPresentation& pres, const ProjectiveSpec& p,
                                const ProjectiveSpec& q);

/// Adjoins two fresh generators with word(P) = P1(0) + P2(0); returns the
/// new presentation and the fresh names.
std::pair<MonoidPresentation, std::pair<std::string, std::string>> vgr_adjoin_split(
    const MonoidPresentation& pres, const ProjectiveSpec& p);

struct RealizeResult {
    Hypergraph hypergraph;
    WeightMap weights;
    MonoidPresentation reproduced; // hyper_vgr_presentation of the output
    bool verified = false;
    std::string message;
};

/// Realizes a finitely presented conical pointed monoid, given with its order
/// unit equal to the sum of its generators and no zero relation side, as the
/// graded V-monoid of a hyper Leavitt path algebra.
RealizeResult realize(const MonoidPresentation& m, const Field& field = Field::rationals());

struct GradingReport {
    Decision strongly_graded;
    Decision crossed_product;
};

/// Monoid-level strongly-graded / crossed-product detection via order-unit
/// conditions on the class of the identity.
GradingReport grading_structure_check(const Hypergraph& h, const WeightMap& w,
                                      const Budget& budget);

struct HomBounds {
    std::int64_t max_coeff = 2;
    std::int64_t shift_radius = 1;
    std::int64_t max_support = 2;
};

struct HomCertificate {
    std::map<std::string, MWord> assignment; // vertex of E -> word over F
    struct Entry {
        std::string label; // relation vertex, or "unit"
        MWord lhs_image, rhs_image;
        Decision decision;
    };
    std::vector<Entry> transcript;
    bool pointed = false;
    bool nonvanishing = false;
};

/// Deterministic enumeration of vertex assignments within the bounds,
/// accepting the first one whose relation images (and, if required, the unit
/// condition) are decided Equal by the graph engine.
std::optional<HomCertificate> hom_search(const Graph& e, const Graph& f, const HomBounds& bounds,
                                         bool require_pointed, std::int64_t depth = 16);

} // namespace gkt

#endif
