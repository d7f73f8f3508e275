#ifndef GKT_SMASH_HPP
#define GKT_SMASH_HPP

#include "gkt/bergman.hpp"

#include <string>
#include <vector>

namespace gkt {

/// Generator names of smash presentations.
std::string smash_eps_name(const GradeGroup& g, const std::string& component,
                           const GradeElement& beta);
std::string smash_sym(const GradeGroup& g, const std::string& label, std::size_t j, std::size_t m,
                      const GradeElement& gamma);
std::string smash_sym_prime(const GradeGroup& g, const std::string& label, std::size_t m,
                            std::size_t j, const GradeElement& gamma);

/// Window Gamma_A = { gamma - beta_j, gamma - gamma_m } over all pairs,
/// sorted canonically.
std::vector<GradeElement> smash_window(const BergmanData& data,
                                       const std::vector<GradeElement>& a);
std::vector<GradeElement> smash_window_idem(const GradeGroup& g, const ShiftedIdempotent& e,
                                            const std::vector<GradeElement>& a);

/// Presentation of R # Gamma_A on the idempotent basis eps_t p_beta:
/// pairwise orthogonal idempotents summing to 1. Empty window gives the
/// empty (non-unital) presentation. The output is an ungraded k-algebra.
AlgebraPresentation smash_ring_presentation(const BergmanData& data,
                                            const std::vector<GradeElement>& a);

/// Finite smash piece with the window-indexed symbols, their monomial
/// relations, and the four matrix relation families.
AlgebraPresentation smash_TA_presentation(const BergmanData& data,
                                          const std::vector<GradeElement>& a);

/// Same piece presented as a Bergman algebra over R # Gamma_A: the monomial
/// relations are omitted (they are derivable).
AlgebraPresentation smash_BA_presentation(const BergmanData& data,
                                          const std::vector<GradeElement>& a);

/// Idempotent-endomorphism variants.
AlgebraPresentation smash_TA_idem_presentation(const GradeGroup& g, const SemisimpleRing& ring,
                                               const ShiftedIdempotent& e,
                                               const std::vector<GradeElement>& a,
                                               const std::string& label = "e");
AlgebraPresentation smash_BA_idem_presentation(const GradeGroup& g, const SemisimpleRing& ring,
                                               const ShiftedIdempotent& e,
                                               const std::vector<GradeElement>& a,
                                               const std::string& label = "e");

struct SmashObligation {
    std::string description;
    ARelation identity;
    ProveResult proof;
};

struct SmashCheckReport {
    AlgebraPresentation ta;
    AlgebraPresentation ba;
    std::vector<SmashObligation> obligations;
    RenameReport rename;
    bool pass = false;
};

/// Proves every monomial relation of T_A inside B_A with the bounded
/// rewriting prover, then checks that T_A equals B_A plus the proved
/// relations; unproved obligations are reported, never silently passed.
SmashCheckReport propbergsmash_check(const BergmanData& data, const std::vector<GradeElement>& a,
                                     int prover_depth = 8);

SmashCheckReport propbergsmash_idem_check(const GradeGroup& g, const SemisimpleRing& ring,
                                          const ShiftedIdempotent& e,
                                          const std::vector<GradeElement>& a,
                                          const std::string& label = "e", int prover_depth = 8);

} // namespace gkt

#endif
