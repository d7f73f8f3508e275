#ifndef GKT_HYPERLPA_HPP
#define GKT_HYPERLPA_HPP

#include "gkt/algpres.hpp"
#include "gkt/bergman.hpp"
#include "gkt/hypergraph.hpp"
#include "gkt/mword.hpp"

namespace gkt {

/// Hyperedge symbol names: h(i,j) and h(i,j)*.
std::string hyper_sym(const std::string& hedge, std::size_t i, std::size_t j);
std::string hyper_sym_star(const std::string& hedge, std::size_t i, std::size_t j);

/// Leavitt path algebra of a hypergraph, graded by the weight map; relations
/// in the matrix shape (vertices orthogonal idempotents summing to 1,
/// s_i h_ij r_j = h_ij and r_j h*_ij s_i = h*_ij, hh* = e_h, h*h = f_h).
AlgebraPresentation hyper_lpa_presentation(const Hypergraph& h, const WeightMap& w,
                                           const Field& field = Field::rationals());

/// Path algebra: vertices degree 0, edges degree 1, uv = delta_uv u,
/// s(e)e = e, e r(e) = e.
AlgebraPresentation path_algebra_presentation(const Graph& e,
                                              const Field& field = Field::rationals());

/// Leavitt path algebra of a graph, emitted in the same relation shape as
/// the hypergraph presentation of its associated hypergraph.
AlgebraPresentation lpa_presentation(const Graph& e, const Field& field = Field::rationals());

/// Talented monoid presentation: generators the vertices, one shift-closed
/// relation v(0) = sum over outgoing edges of r(e)(1) per regular vertex,
/// order unit the sum of all vertices.
MonoidPresentation talented_presentation(const Graph& e);

/// Graded V-monoid presentation of a hyper Leavitt path algebra: per
/// hyperedge the relation sum_i s_i(a_i) = sum_j r_j(b_j).
MonoidPresentation hyper_vgr_presentation(const Hypergraph& h, const WeightMap& w);

struct ChainReport {
    AlgebraPresentation path_algebra;
    BergmanData data;
    AlgebraPresentation bergman_level4;
    AlgebraPresentation hyper_lpa;
    AlgebraPresentation lpa;
    RenameReport bergman_vs_hyper;
    RenameReport hyper_vs_lpa;
    bool pass = false;
};

/// Emits the path algebra, the Bergman data of its vertex resolutions, the
/// level-4 Bergman presentation, L(H) and L(E), and checks the two
/// element-preserving rename equalities B_R(e,f) = L(H) and L(H) = L(E).
ChainReport localization_chain_check(const Graph& e, const Field& field = Field::rationals());

} // namespace gkt

#endif
