#include "gkt/hypergraph.hpp"

#include "gkt/field.hpp"

#include <algorithm>
#include <set>

namespace gkt {

void Graph::validate() const {
    std::set<std::string> vs(vertices.begin(), vertices.end());
    if (vs.size() != vertices.size()) throw spec_error("duplicate vertex");
    std::set<std::string> es;
    for (const auto& e : edges) {
        if (!es.insert(e.name).second) throw spec_error("duplicate edge name '" + e.name + "'");
        if (!vs.count(e.src) || !vs.count(e.dst))
            throw spec_error("edge '" + e.name + "' uses undeclared vertex");
    }
}

bool Graph::is_vertex(const std::string& v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

std::vector<const Edge*> Graph::out_edges(const std::string& v) const {
    std::vector<const Edge*> out;
    for (const auto& e : edges)
        if (e.src == v) out.push_back(&e);
    return out;
}

std::vector<std::string> Graph::regular_vertices() const {
    std::vector<std::string> out;
    for (const auto& v : vertices)
        if (!out_edges(v).empty()) out.push_back(v);
    return out;
}

void Hypergraph::validate() const {
    std::set<std::string> vs(vertices.begin(), vertices.end());
    if (vs.size() != vertices.size()) throw spec_error("duplicate vertex");
    std::set<std::string> hs;
    for (const auto& h : hyperedges) {
        if (!hs.insert(h.name).second) throw spec_error("duplicate hyperedge name '" + h.name + "'");
        if (h.sources.empty() || h.ranges.empty())
            throw spec_error("hyperedge '" + h.name + "' has an empty family");
        for (const auto& v : h.sources)
            if (!vs.count(v)) throw spec_error("hyperedge '" + h.name + "' uses undeclared vertex");
        for (const auto& v : h.ranges)
            if (!vs.count(v)) throw spec_error("hyperedge '" + h.name + "' uses undeclared vertex");
    }
}

void validate_weights(const Hypergraph& h, const WeightMap& w) {
    h.validate();
    w.group.validate();
    for (const auto& he : h.hyperedges) {
        auto it = w.weights.find(he.name);
        if (it == w.weights.end())
            throw spec_error("missing weights for hyperedge '" + he.name + "'");
        const HedgeWeights& hw = it->second;
        if (hw.a.size() != he.sources.size() || hw.b.size() != he.ranges.size())
            throw spec_error("weight shape mismatch on hyperedge '" + he.name + "'");
        for (const auto& ge : hw.a) g_check(w.group, ge);
        for (const auto& ge : hw.b) g_check(w.group, ge);
        if (!g_is_zero(hw.a.front()))
            throw spec_error("first row offset must be zero on hyperedge '" + he.name + "'");
    }
    if (w.weights.size() != h.hyperedges.size())
        throw spec_error("weights present for unknown hyperedges");
}

GradeElement weight_of(const GradeGroup& g, const HedgeWeights& hw, std::size_t i, std::size_t j) {
    return g_sub(g, hw.b.at(j), hw.a.at(i));
}

std::pair<Hypergraph, WeightMap> graph_to_hypergraph(const Graph& e) {
    std::map<std::string, std::int64_t> ones;
    for (const auto& v : e.regular_vertices()) ones[v] = 1;
    return weighted_graph_to_hypergraph(e, ones);
}

std::pair<Hypergraph, WeightMap> weighted_graph_to_hypergraph(
    const Graph& e, const std::map<std::string, std::int64_t>& vertex_weight) {
    e.validate();
    GradeGroup z = GradeGroup::integers();
    Hypergraph h;
    h.name = e.name;
    h.vertices = e.vertices;
    WeightMap w;
    w.group = z;
    for (const auto& v : e.regular_vertices()) {
        auto it = vertex_weight.find(v);
        std::int64_t mult = it == vertex_weight.end() ? 1 : it->second;
        if (mult <= 0) throw spec_error("vertex weight must be positive at '" + v + "'");
        Hyperedge he;
        he.name = v;
        he.sources.assign(mult, v);
        for (const Edge* ed : e.out_edges(v)) he.ranges.push_back(ed->dst);
        HedgeWeights hw;
        hw.a.assign(he.sources.size(), g_zero(z));
        hw.b.assign(he.ranges.size(), g_int(z, 1));
        w.weights[he.name] = std::move(hw);
        h.hyperedges.push_back(std::move(he));
    }
    validate_weights(h, w);
    return {std::move(h), std::move(w)};
}

} // namespace gkt
