#ifndef GKT_HYPERGRAPH_HPP
#define GKT_HYPERGRAPH_HPP

#include "gkt/grade.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gkt {

struct Edge {
    std::string name, src, dst;

    bool operator==(const Edge&) const = default;
};

/// Finite directed graph.
struct Graph {
    std::string name = "E";
    std::vector<std::string> vertices; // declaration order, unique
    std::vector<Edge> edges;           // declaration order, unique names

    void validate() const;
    bool is_vertex(const std::string& v) const;
    std::vector<const Edge*> out_edges(const std::string& v) const;
    /// Vertices with at least one outgoing edge, in declaration order.
    std::vector<std::string> regular_vertices() const;

    bool operator==(const Graph&) const = default;
};

struct Hyperedge {
    std::string name;
    std::vector<std::string> sources; // nonempty
    std::vector<std::string> ranges;  // nonempty

    bool operator==(const Hyperedge&) const = default;
};

/// Finite regular directed hypergraph.
struct Hypergraph {
    std::string name = "H";
    std::vector<std::string> vertices;
    std::vector<Hyperedge> hyperedges;

    void validate() const;
    bool operator==(const Hypergraph&) const = default;
};

/// Canonical weight storage per hyperedge: row offsets a (a[0] = 0) and
/// column values b; the induced weight is w(h_ij) = b[j] - a[i], which makes
/// the coherence identity hold by construction.
struct HedgeWeights {
    std::vector<GradeElement> a, b;

    bool operator==(const HedgeWeights&) const = default;
};

struct WeightMap {
    GradeGroup group;
    std::map<std::string, HedgeWeights> weights; // keyed by hyperedge name

    bool operator==(const WeightMap&) const = default;
};

/// Shapes must match the hypergraph and a[0] must be zero.
void validate_weights(const Hypergraph& h, const WeightMap& w);

GradeElement weight_of(const GradeGroup& g, const HedgeWeights& hw, std::size_t i, std::size_t j);

/// One hyperedge per regular vertex v: sources (v), ranges (r(e))_{e in
/// s^-1(v)}, weights a = (0), b = (1,...,1) over the integers.
std::pair<Hypergraph, WeightMap> graph_to_hypergraph(const Graph& e);

/// Source family repeated vw(v) times; weights a all zero, b all one.
std::pair<Hypergraph, WeightMap> weighted_graph_to_hypergraph(
    const Graph& e, const std::map<std::string, std::int64_t>& vertex_weight);

} // namespace gkt

#endif
