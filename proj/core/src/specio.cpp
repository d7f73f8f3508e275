#include "gkt/specio.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gkt {

namespace {

enum class Tok { Ident, Int, Sym, Arrow, End };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (text[i + k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        i += n;
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            advance(1);
            continue;
        }
        if (c == '#') { // comment to end of line
            std::size_t j = i;
            while (j < text.size() && text[j] != '\n') ++j;
            advance(j - i);
            continue;
        }
        int tl = line, tc = col;
        if (std::isalpha((unsigned char)c) || c == '_') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum((unsigned char)text[j]) || text[j] == '_'))
                ++j;
            out.push_back({Tok::Ident, text.substr(i, j - i), tl, tc});
            advance(j - i);
            continue;
        }
        if (std::isdigit((unsigned char)c)) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit((unsigned char)text[j])) ++j;
            out.push_back({Tok::Int, text.substr(i, j - i), tl, tc});
            advance(j - i);
            continue;
        }
        if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            out.push_back({Tok::Arrow, "->", tl, tc});
            advance(2);
            continue;
        }
        static const std::string syms = "{}()[];:,=+-/^";
        if (syms.find(c) != std::string::npos) {
            out.push_back({Tok::Sym, std::string(1, c), tl, tc});
            advance(1);
            continue;
        }
        throw ParseError(tl, tc, std::string("unexpected character '") + c + "'");
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(lex(text)) {}

    SpecDocument document() {
        const Token& head = peek();
        if (head.kind != Tok::Ident)
            fail("expected one of: monoid, graph, hypergraph, bergman, query");
        SpecDocument doc;
        if (head.text == "monoid") doc.payload = monoid_doc();
        else if (head.text == "graph") doc.payload = graph_doc();
        else if (head.text == "hypergraph") doc.payload = hypergraph_doc();
        else if (head.text == "bergman") doc.payload = bergman_doc();
        else if (head.text == "query") doc.payload = query_doc();
        else fail("expected one of: monoid, graph, hypergraph, bergman, query");
        expect_end();
        return doc;
    }

    MWord word_only(const GradeGroup& g) {
        MWord w = word(g);
        expect_end();
        return w;
    }

    GradeElement element_only(const GradeGroup& g) {
        GradeElement e = element(g);
        expect_end();
        return e;
    }

    std::vector<GradeElement> element_list(const GradeGroup& g) {
        std::vector<GradeElement> out;
        out.push_back(element(g));
        while (is_sym(",")) {
            take();
            out.push_back(element(g));
        }
        expect_end();
        return out;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;

    const Token& peek(std::size_t ahead = 0) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }
    const Token& take() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

    [[noreturn]] void fail(const std::string& expected) const {
        const Token& t = peek();
        std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(t.line, t.col, "unexpected " + got + "; " + expected);
    }

    bool is_sym(const char* s, std::size_t ahead = 0) const {
        const Token& t = peek(ahead);
        return (t.kind == Tok::Sym || t.kind == Tok::Arrow) && t.text == s;
    }
    bool is_kw(const char* s, std::size_t ahead = 0) const {
        const Token& t = peek(ahead);
        return t.kind == Tok::Ident && t.text == s;
    }
    void sym(const char* s) {
        if (!is_sym(s)) fail(std::string("expected '") + s + "'");
        take();
    }
    void kw(const char* s) {
        if (!is_kw(s)) fail(std::string("expected '") + s + "'");
        take();
    }
    std::string ident() {
        if (peek().kind != Tok::Ident) fail("expected identifier");
        return take().text;
    }
    std::int64_t uint_lit() {
        if (peek().kind != Tok::Int) fail("expected integer");
        return std::stoll(take().text);
    }
    std::int64_t int_lit() {
        bool neg = false;
        if (is_sym("-")) {
            take();
            neg = true;
        }
        std::int64_t v = uint_lit();
        return neg ? -v : v;
    }
    void expect_end() {
        if (peek().kind != Tok::End) fail("expected end of input");
    }

    // GROUP := '1' | part ('x' part)*  with part 'Z' | 'Z^d' | 'Z/m'
    GradeGroup group() {
        GradeGroup g{0, {}};
        if (peek().kind == Tok::Int && peek().text == "1") {
            take();
            return g;
        }
        bool free_seen = false;
        while (true) {
            if (!is_kw("Z")) fail("expected 'Z', 'Z^d', 'Z/m' or '1'");
            take();
            if (is_sym("^")) {
                take();
                std::int64_t d = uint_lit();
                if (free_seen) fail("expected a single free part in the group");
                if (d < 1) fail("expected positive rank");
                g.rank = (int)d;
                free_seen = true;
            } else if (is_sym("/")) {
                take();
                std::int64_t m = uint_lit();
                if (m < 2) fail("expected torsion modulus >= 2");
                g.torsion.push_back(m);
            } else {
                if (free_seen) fail("expected a single free part in the group");
                g.rank = 1;
                free_seen = true;
            }
            if (is_kw("x")) {
                take();
                continue;
            }
            break;
        }
        return g;
    }

    // ELEMENT := INT | '[' ints? (';' ints)? ']'
    // A bare integer means the zero element, or n times the free generator
    // when the group is Z.
    GradeElement element(const GradeGroup& g) {
        if (peek().kind == Tok::Int || is_sym("-")) {
            const Token& at = peek();
            std::int64_t n = int_lit();
            if (n == 0) return g_zero(g);
            if (g.rank == 1 && g.torsion.empty()) return g_int(g, n);
            throw ParseError(at.line, at.col, "bare integer element needs the group Z");
        }
        const Token& open = peek();
        sym("[");
        GradeElement e;
        if (!is_sym(";") && !is_sym("]")) {
            e.free.push_back(int_lit());
            while (is_sym(",")) {
                take();
                e.free.push_back(int_lit());
            }
        }
        if (is_sym(";")) {
            take();
            e.residues.push_back(int_lit());
            while (is_sym(",")) {
                take();
                e.residues.push_back(int_lit());
            }
        }
        sym("]");
        if ((int)e.free.size() != g.rank || e.residues.size() != g.torsion.size())
            throw ParseError(open.line, open.col, "grade element shape does not match the group " +
                                                      format_group(g));
        for (size_t i = 0; i < e.residues.size(); ++i)
            if (e.residues[i] < 0 || e.residues[i] >= g.torsion[i])
                throw ParseError(open.line, open.col, "non-reduced residue");
        return e;
    }

    // WORD := '0' | term ('+' term)*   with term := INT? IDENT ('[' ... ']')?
    MWord word(const GradeGroup& g) {
        MWord w;
        if (peek().kind == Tok::Int && peek().text == "0" && !(peek(1).kind == Tok::Ident)) {
            take();
            return w;
        }
        while (true) {
            std::int64_t mult = 1;
            if (peek().kind == Tok::Int) mult = uint_lit();
            if (mult <= 0) fail("expected positive coefficient");
            std::string gen = ident();
            GradeElement shift = g_zero(g);
            if (is_sym("[")) shift = element(g);
            w = word_add(w, word_of(gen, shift, mult));
            if (is_sym("+")) {
                take();
                continue;
            }
            break;
        }
        return w;
    }

    std::vector<std::string> name_list() {
        std::vector<std::string> out;
        if (is_sym(";")) return out; // empty list
        out.push_back(ident());
        while (is_sym(",")) {
            take();
            out.push_back(ident());
        }
        return out;
    }

    MonoidDoc monoid_doc() {
        kw("monoid");
        MonoidDoc doc;
        doc.name = ident();
        kw("over");
        GradeGroup g = group();
        sym("{");
        kw("gens");
        sym(":");
        std::vector<std::string> gens = name_list();
        sym(";");
        std::optional<MWord> unit;
        if (is_kw("unit")) {
            take();
            sym(":");
            unit = word(g);
            sym(";");
        }
        std::vector<MRelation> rels;
        while (is_kw("rel")) {
            take();
            sym(":");
            if (is_sym("=")) fail("empty relation side; expected word");
            MWord lhs = word(g);
            sym("=");
            if (is_sym(";")) fail("empty relation side; expected word");
            MWord rhs = word(g);
            sym(";");
            rels.push_back({lhs, rhs});
        }
        sym("}");
        try {
            doc.presentation = make_presentation(g, gens, rels, unit);
        } catch (const spec_error& e) {
            throw ParseError(peek().line, peek().col, e.what());
        }
        return doc;
    }

    GraphDoc graph_doc() {
        kw("graph");
        GraphDoc doc;
        doc.graph.name = ident();
        sym("{");
        kw("vertices");
        sym(":");
        doc.graph.vertices = name_list();
        sym(";");
        while (is_kw("edge")) {
            take();
            Edge e;
            e.name = ident();
            sym(":");
            e.src = ident();
            if (!is_sym("->")) fail("expected '->'");
            take();
            e.dst = ident();
            sym(";");
            doc.graph.edges.push_back(std::move(e));
        }
        sym("}");
        try {
            doc.graph.validate();
        } catch (const spec_error& e) {
            throw ParseError(peek().line, peek().col, e.what());
        }
        return doc;
    }

    HypergraphDoc hypergraph_doc() {
        kw("hypergraph");
        HypergraphDoc doc;
        doc.hypergraph.name = ident();
        kw("over");
        doc.weights.group = group();
        sym("{");
        kw("vertices");
        sym(":");
        doc.hypergraph.vertices = name_list();
        sym(";");
        while (is_kw("hedge")) {
            take();
            Hyperedge he;
            he.name = ident();
            sym(":");
            sym("(");
            he.sources = name_list();
            sym(")");
            if (!is_sym("->")) fail("expected '->'");
            take();
            sym("(");
            he.ranges = name_list();
            sym(")");
            kw("weights");
            HedgeWeights hw;
            kw("a");
            sym("=");
            sym("(");
            hw.a.push_back(element(doc.weights.group));
            while (is_sym(",")) {
                take();
                hw.a.push_back(element(doc.weights.group));
            }
            sym(")");
            kw("b");
            sym("=");
            sym("(");
            hw.b.push_back(element(doc.weights.group));
            while (is_sym(",")) {
                take();
                hw.b.push_back(element(doc.weights.group));
            }
            sym(")");
            sym(";");
            doc.weights.weights[he.name] = std::move(hw);
            doc.hypergraph.hyperedges.push_back(std::move(he));
        }
        sym("}");
        try {
            validate_weights(doc.hypergraph, doc.weights);
        } catch (const spec_error& e) {
            throw ParseError(peek().line, peek().col, e.what());
        }
        return doc;
    }

    Rational rational_lit() {
        bool neg = false;
        if (is_sym("-")) {
            take();
            neg = true;
        }
        std::int64_t num = uint_lit();
        std::int64_t den = 1;
        if (is_sym("/")) {
            take();
            den = uint_lit();
            if (den == 0) fail("expected nonzero denominator");
        }
        Rational q(num, den);
        return neg ? Rational(-q) : q;
    }

    RingElem matrix_entry(const SemisimpleRing& R) {
        if (is_kw("eps")) {
            take();
            sym("(");
            std::string label = ident();
            sym(")");
            std::size_t idx;
            try {
                idx = R.index_of(label);
            } catch (const spec_error& e) {
                fail(e.what());
            }
            RingElem r = r_zero(R);
            r.comps[idx] = 1;
            return r;
        }
        if (is_sym("(")) {
            take();
            RingElem r = r_zero(R);
            for (std::size_t i = 0; i < R.components.size(); ++i) {
                if (i) sym(",");
                r.comps[i] = R.field.normalize(rational_lit());
            }
            sym(")");
            return r;
        }
        if (peek().kind == Tok::Int && peek().text == "0") {
            take();
            return r_zero(R);
        }
        if (peek().kind == Tok::Int && peek().text == "1") {
            take();
            return r_one(R);
        }
        fail("expected matrix entry: '(q,...)', 'eps(t)', '0' or '1'");
    }

    std::pair<Mat, std::vector<GradeElement>> matrix_with_shifts(const SemisimpleRing& R,
                                                                 const GradeGroup& g) {
        const Token& open = peek();
        sym("[");
        std::vector<std::vector<RingElem>> rows;
        while (true) {
            sym("[");
            std::vector<RingElem> row;
            row.push_back(matrix_entry(R));
            while (is_sym(",")) {
                take();
                row.push_back(matrix_entry(R));
            }
            sym("]");
            rows.push_back(std::move(row));
            if (is_sym(",")) {
                take();
                continue;
            }
            break;
        }
        sym("]");
        std::size_t n = rows.size();
        for (const auto& r : rows)
            if (r.size() != n) throw ParseError(open.line, open.col, "matrix must be square");
        Mat m = m_zero(R, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
        kw("shifts");
        sym("(");
        std::vector<GradeElement> shifts;
        shifts.push_back(element(g));
        while (is_sym(",")) {
            take();
            shifts.push_back(element(g));
        }
        sym(")");
        if (shifts.size() != n)
            throw ParseError(open.line, open.col, "shift vector length must match matrix size");
        return {std::move(m), std::move(shifts)};
    }

    BergmanDoc bergman_doc() {
        kw("bergman");
        BergmanDoc doc;
        doc.name = ident();
        kw("over");
        doc.data.group = group();
        kw("field");
        if (is_kw("Q")) {
            take();
            doc.data.ring.field = Field::rationals();
        } else if (is_kw("Fp")) {
            take();
            sym(":");
            try {
                doc.data.ring.field = Field::prime(uint_lit());
            } catch (const spec_error& e) {
                fail(e.what());
            }
        } else {
            fail("expected field 'Q' or 'Fp:<p>'");
        }
        sym("{");
        kw("components");
        sym(":");
        doc.data.ring.components = name_list();
        sym(";");
        while (is_kw("pair")) {
            take();
            BergmanPair pair;
            pair.label = ident();
            sym(":");
            kw("e");
            sym("=");
            const Token& at = peek();
            auto [me, se] = matrix_with_shifts(doc.data.ring, doc.data.group);
            sym(",");
            kw("f");
            sym("=");
            auto [mf, sf] = matrix_with_shifts(doc.data.ring, doc.data.group);
            sym(";");
            try {
                pair.e = make_idempotent(doc.data.group, doc.data.ring, se, me);
                pair.f = make_idempotent(doc.data.group, doc.data.ring, sf, mf);
            } catch (const spec_error& e) {
                throw ParseError(at.line, at.col, e.what());
            }
            doc.data.pairs.push_back(std::move(pair));
        }
        sym("}");
        try {
            doc.data.validate();
        } catch (const spec_error& e) {
            throw ParseError(peek().line, peek().col, e.what());
        }
        return doc;
    }

    QueryDoc query_doc() {
        kw("query");
        QueryDoc doc;
        doc.name = ident();
        kw("over");
        doc.group = group();
        sym("{");
        doc.lhs = word(doc.group);
        sym("=");
        doc.rhs = word(doc.group);
        sym(";");
        sym("}");
        return doc;
    }
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += sep;
        s += parts[i];
    }
    return s;
}

} // namespace

SpecDocument parse(const std::string& text) { return Parser(text).document(); }

MWord parse_word_text(const GradeGroup& g, const std::string& text) {
    return Parser(text).word_only(g);
}

GradeElement parse_element_text(const GradeGroup& g, const std::string& text) {
    return Parser(text).element_only(g);
}

std::vector<GradeElement> parse_element_list(const GradeGroup& g, const std::string& text) {
    return Parser(text).element_list(g);
}

std::string print_monoid(const std::string& name, const MonoidPresentation& p) {
    MonoidPresentation c = make_presentation(p.group, p.generators, p.relations, p.order_unit);
    std::ostringstream os;
    os << "monoid " << name << " over " << format_group(c.group) << " {\n";
    os << "  gens: " << join(c.generators, ", ") << ";\n";
    if (c.order_unit) os << "  unit: " << format_word(c.group, *c.order_unit) << ";\n";
    for (const auto& r : c.relations)
        os << "  rel: " << format_word(c.group, r.lhs) << " = " << format_word(c.group, r.rhs)
           << ";\n";
    os << "}\n";
    return os.str();
}

std::string print_graph(const Graph& g) {
    Graph c = g;
    std::sort(c.vertices.begin(), c.vertices.end());
    std::sort(c.edges.begin(), c.edges.end(),
              [](const Edge& a, const Edge& b) { return a.name < b.name; });
    std::ostringstream os;
    os << "graph " << c.name << " {\n";
    os << "  vertices: " << join(c.vertices, ", ") << ";\n";
    for (const auto& e : c.edges)
        os << "  edge " << e.name << ": " << e.src << " -> " << e.dst << ";\n";
    os << "}\n";
    return os.str();
}

std::string print_hypergraph(const Hypergraph& h, const WeightMap& w) {
    validate_weights(h, w);
    Hypergraph c = h;
    std::sort(c.vertices.begin(), c.vertices.end());
    std::sort(c.hyperedges.begin(), c.hyperedges.end(),
              [](const Hyperedge& a, const Hyperedge& b) { return a.name < b.name; });
    std::ostringstream os;
    os << "hypergraph " << c.name << " over " << format_group(w.group) << " {\n";
    os << "  vertices: " << join(c.vertices, ", ") << ";\n";
    for (const auto& he : c.hyperedges) {
        const HedgeWeights& hw = w.weights.at(he.name);
        std::vector<std::string> as, bs;
        for (const auto& e : hw.a) as.push_back(format_elem(w.group, e));
        for (const auto& e : hw.b) bs.push_back(format_elem(w.group, e));
        os << "  hedge " << he.name << ": (" << join(he.sources, ", ") << ") -> ("
           << join(he.ranges, ", ") << ") weights a=(" << join(as, ", ") << ") b=("
           << join(bs, ", ") << ");\n";
    }
    os << "}\n";
    return os.str();
}

std::string print_bergman(const std::string& name, const BergmanData& data) {
    data.validate();
    std::ostringstream os;
    os << "bergman " << name << " over " << format_group(data.group) << " field "
       << data.ring.field.to_string() << " {\n";
    os << "  components: " << join(data.ring.components, ", ") << ";\n";
    auto matrix = [&](const ShiftedIdempotent& e) {
        std::string s = "[";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) s += ", ";
            s += "[";
            for (std::size_t j = 0; j < e.size(); ++j) {
                if (j) s += ", ";
                s += "(";
                for (std::size_t t = 0; t < e.ring.components.size(); ++t) {
                    if (t) s += ", ";
                    s += rational_to_string(e.entries.at(i, j).comps[t]);
                }
                s += ")";
            }
            s += "]";
        }
        s += "] shifts (";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) s += ", ";
            s += format_elem(data.group, e.shifts[i]);
        }
        s += ")";
        return s;
    };
    std::vector<const BergmanPair*> pairs;
    for (const auto& p : data.pairs) pairs.push_back(&p);
    std::sort(pairs.begin(), pairs.end(),
              [](const BergmanPair* a, const BergmanPair* b) { return a->label < b->label; });
    for (const BergmanPair* p : pairs)
        os << "  pair " << p->label << ": e = " << matrix(p->e) << " , f = " << matrix(p->f)
           << ";\n";
    os << "}\n";
    return os.str();
}

std::string print(const SpecDocument& doc) {
    switch (doc.kind()) {
    case DocKind::Monoid: {
        const auto& d = std::get<MonoidDoc>(doc.payload);
        return print_monoid(d.name, d.presentation);
    }
    case DocKind::Graph:
        return print_graph(std::get<GraphDoc>(doc.payload).graph);
    case DocKind::Hypergraph: {
        const auto& d = std::get<HypergraphDoc>(doc.payload);
        return print_hypergraph(d.hypergraph, d.weights);
    }
    case DocKind::Bergman: {
        const auto& d = std::get<BergmanDoc>(doc.payload);
        return print_bergman(d.name, d.data);
    }
    case DocKind::Query: {
        const auto& d = std::get<QueryDoc>(doc.payload);
        std::ostringstream os;
        os << "query " << d.name << " over " << format_group(d.group) << " {\n  "
           << format_word(d.group, d.lhs) << " = " << format_word(d.group, d.rhs) << ";\n}\n";
        return os.str();
    }
    }
    throw spec_error("unreachable");
}

std::string print_algebra_presentation(const AlgebraPresentation& p) {
    std::ostringstream os;
    os << "presentation over " << format_group(p.group) << " field " << p.field.to_string();
    if (p.unital) os << " unital";
    os << " {\n";
    for (const auto& g : p.generators)
        os << "  gen " << g.name << " : " << format_elem(p.group, g.degree) << ";\n";
    for (const auto& r : p.relations)
        os << "  rel " << format_arelation(p.field, r) << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace gkt
