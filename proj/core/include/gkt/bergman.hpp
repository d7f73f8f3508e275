#ifndef GKT_BERGMAN_HPP
#define GKT_BERGMAN_HPP

#include "gkt/algpres.hpp"
#include "gkt/hypergraph.hpp"
#include "gkt/linalg.hpp"

#include <string>
#include <vector>

namespace gkt {

/// Pair of homogeneous degree-zero idempotents over the same ring.
struct BergmanPair {
    std::string label;
    ShiftedIdempotent e; // m x m, shifts beta
    ShiftedIdempotent f; // n x n, shifts gamma

    bool operator==(const BergmanPair&) const = default;
};

struct BergmanData {
    GradeGroup group;
    SemisimpleRing ring;
    std::vector<BergmanPair> pairs; // unique labels

    void validate() const;
    bool operator==(const BergmanData&) const = default;
};

/// Generator names used by all emitters.
std::string eps_name(const std::string& component);
std::string pair_sym(const std::string& label, std::size_t i, std::size_t j);      // h_{ij}
std::string pair_sym_star(const std::string& label, std::size_t j, std::size_t i); // h*_{ji}

/// Presentation of the level-1..4 algebra: base-ring idempotents eps_t plus
/// per pair the symbols h (and h* from level 2), with ehf = h, then fh*e =
/// h*, then hh* = e, then h*h = f, each expanded entrywise over the eps
/// basis; identically-zero scalar relations are dropped.
AlgebraPresentation bergman_presentation(const BergmanData& data, int level);

/// Idempotent-endomorphism variant: symbols h with ehe = h and h^2 = h.
AlgebraPresentation bergman_idem_presentation(const GradeGroup& g, const SemisimpleRing& ring,
                                              const ShiftedIdempotent& e,
                                              const std::string& label = "h");

/// Universal inverse of a scalar map h_g (n x m over the ring) between the
/// projectives cut out by e (n x n, shifts beta) and f (m x m, shifts gamma):
/// adjoins h* with fh*e = h*, h_g h* = e, h* h_g = f.
AlgebraPresentation localization_presentation(const GradeGroup& g, const SemisimpleRing& ring,
                                              const ShiftedIdempotent& e,
                                              const ShiftedIdempotent& f, const Mat& h_g,
                                              const std::string& label = "h");

/// Universal-map variant: first adjoins the universal morphism h between the
/// two projectives (ehf = h), then its inverse; the relation set is that of
/// the level-4 algebra, which is how path-algebra resolutions localize to
/// Leavitt path algebras.
AlgebraPresentation localization_presentation(const GradeGroup& g, const SemisimpleRing& ring,
                                              const ShiftedIdempotent& e,
                                              const ShiftedIdempotent& f,
                                              const std::string& label = "h");

struct PairWitness {
    std::string label;
    EquivalenceWitness e_witness, f_witness;
};

struct BergmanToHypergraph {
    Hypergraph hypergraph;
    WeightMap weights;
    std::vector<PairWitness> witnesses;
};

/// Diagonalizes every pair and reads off one hyperedge per pair; vertices
/// are the ring components, weights are stored canonically (a[0] = 0).
BergmanToHypergraph bergman_to_hypergraph(const BergmanData& data);

/// Converse: ring k^{H^0}, diagonal pairs with the stored (a, b) as shifts.
BergmanData hypergraph_to_bergman(const Hypergraph& h, const WeightMap& w, const Field& field);

} // namespace gkt

#endif
