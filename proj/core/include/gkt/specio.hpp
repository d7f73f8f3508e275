#ifndef GKT_SPECIO_HPP
#define GKT_SPECIO_HPP

#include "gkt/algpres.hpp"
#include "gkt/bergman.hpp"
#include "gkt/hypergraph.hpp"
#include "gkt/mword.hpp"

#include <string>
#include <variant>

namespace gkt {

/// Parse failure with an exact source position and the expected token set.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int col, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                             ": " + msg),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_, col_;
};

enum class DocKind { Monoid, Graph, Hypergraph, Bergman, Query };

struct MonoidDoc {
    std::string name;
    MonoidPresentation presentation;

    bool operator==(const MonoidDoc&) const = default;
};

struct GraphDoc {
    Graph graph;

    bool operator==(const GraphDoc&) const = default;
};

struct HypergraphDoc {
    Hypergraph hypergraph;
    WeightMap weights;

    bool operator==(const HypergraphDoc&) const = default;
};

struct BergmanDoc {
    std::string name;
    BergmanData data;

    bool operator==(const BergmanDoc&) const = default;
};

struct QueryDoc {
    std::string name;
    GradeGroup group;
    MWord lhs, rhs;

    bool operator==(const QueryDoc&) const = default;
};

struct SpecDocument {
    std::variant<MonoidDoc, GraphDoc, HypergraphDoc, BergmanDoc, QueryDoc> payload;

    DocKind kind() const { return static_cast<DocKind>(payload.index()); }
    bool operator==(const SpecDocument&) const = default;
};

SpecDocument parse(const std::string& text);
std::string print(const SpecDocument& doc);

/// Word over an already-known grade group (CLI query arguments).
MWord parse_word_text(const GradeGroup& g, const std::string& text);

/// Single grade element, e.g. "0", "1", "[2,1;0]".
GradeElement parse_element_text(const GradeGroup& g, const std::string& text);

/// Comma-separated grade elements (the CLI --window argument).
std::vector<GradeElement> parse_element_list(const GradeGroup& g, const std::string& text);

/// Deterministic presentation output: generators with degrees in a header
/// block, one relation per line.
std::string print_algebra_presentation(const AlgebraPresentation& p);

std::string print_monoid(const std::string& name, const MonoidPresentation& p);
std::string print_graph(const Graph& g);
std::string print_hypergraph(const Hypergraph& h, const WeightMap& w);
std::string print_bergman(const std::string& name, const BergmanData& data);

} // namespace gkt

#endif
