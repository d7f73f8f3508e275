#include "cli.hpp"

#include "gkt/decide.hpp"
#include "gkt/hyperlpa.hpp"
#include "gkt/smash.hpp"
#include "gkt/specio.hpp"
#include "gkt/vmonoid.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

namespace gkt::cli {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw spec_error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Field parse_field(const std::string& s) {
    if (s == "Q") return Field::rationals();
    if (s.rfind("Fp:", 0) == 0) return Field::prime(std::stoull(s.substr(3)));
    throw spec_error("unknown field '" + s + "', expected Q or Fp:<p>");
}

json decision_json(const Decision& d) {
    return {{"verdict", verdict_name(d.verdict)},
            {"states", d.states_explored},
            {"max_len", d.max_len_reached},
            {"note", d.note}};
}

void print_decision(std::ostream& out, const std::string& label, const Decision& d) {
    out << label << ": " << verdict_name(d.verdict) << "\n";
    out << "  states: " << d.states_explored << "\n";
    out << "  max-len: " << d.max_len_reached << "\n";
    if (!d.note.empty()) out << "  note: " << d.note << "\n";
}

int verdict_exit(Verdict v) { return v == Verdict::Unknown ? exit_unknown : exit_ok; }

template <class T>
const T& doc_as(const SpecDocument& doc, const std::string& want) {
    if (!std::holds_alternative<T>(doc.payload))
        throw spec_error("input file is not a " + want + " document");
    return std::get<T>(doc.payload);
}

struct Options {
    Budget budget;
    std::string field_str = "Q";
    std::string format = "text";

    bool json_out() const { return format == "json"; }
    Field field() const { return parse_field(field_str); }
};

int cmd_decide(const Options& opt, const std::string& file, const std::string& w1,
               const std::string& w2, std::ostream& out) {
    auto doc = parse(slurp(file));
    const auto& m = doc_as<MonoidDoc>(doc, "monoid");
    MWord a = parse_word_text(m.presentation.group, w1);
    MWord b = parse_word_text(m.presentation.group, w2);
    bool graph = is_graph_shaped(m.presentation);
    Decision d = graph ? graph_decide(m.presentation, a, b, opt.budget.depth)
                       : closure_decide(m.presentation, a, b, opt.budget);
    if (opt.json_out()) {
        json j{{"command", "decide"},
               {"engine", graph ? "graph" : "closure"},
               {"decision", decision_json(d)}};
        if (!graph && d.verdict == Verdict::NotEqual)
            j["caveat"] = "NotEqual is relative to the shift window and length cap";
        out << j.dump(2) << "\n";
    } else {
        out << "engine: " << (graph ? "graph" : "closure") << "\n";
        print_decision(out, "decision", d);
        if (!graph && d.verdict == Verdict::NotEqual)
            out << "  caveat: NotEqual is relative to the shift window and length cap\n";
    }
    return verdict_exit(d.verdict);
}

int cmd_talented(const Options& opt, const std::string& file, std::ostream& out) {
    auto doc = parse(slurp(file));
    const auto& g = doc_as<GraphDoc>(doc, "graph");
    std::string text = print_monoid("T_" + g.graph.name, talented_presentation(g.graph));
    if (opt.json_out())
        out << json{{"command", "talented"}, {"monoid", text}}.dump(2) << "\n";
    else
        out << text;
    return exit_ok;
}

int cmd_vmon(const Options& opt, const std::string& file, std::ostream& out) {
    auto doc = parse(slurp(file));
    const auto& h = doc_as<HypergraphDoc>(doc, "hypergraph");
    std::string text =
        print_monoid("V_" + h.hypergraph.name, hyper_vgr_presentation(h.hypergraph, h.weights));
    if (opt.json_out())
        out << json{{"command", "vmon"}, {"monoid", text}}.dump(2) << "\n";
    else
        out << text;
    return exit_ok;
}

int cmd_realize(const Options& opt, const std::string& file, std::ostream& out) {
    auto doc = parse(slurp(file));
    const auto& m = doc_as<MonoidDoc>(doc, "monoid");
    RealizeResult res = realize(m.presentation, opt.field());
    res.hypergraph.name = m.name;
    std::string text = print_hypergraph(res.hypergraph, res.weights);
    if (opt.json_out()) {
        out << json{{"command", "realize"},
                    {"hypergraph", text},
                    {"verified", res.verified},
                    {"message", res.message}}
                   .dump(2)
            << "\n";
    } else {
        out << text;
        out << "verified: " << (res.verified ? "yes" : "no") << "\n";
        out << "message: " << res.message << "\n";
    }
    return res.verified ? exit_ok : exit_error;
}

int cmd_berg(const Options& opt, const std::string& file, int level, std::ostream& out) {
    auto doc = parse(slurp(file));
    const auto& b = doc_as<BergmanDoc>(doc, "bergman");
    std::string text = print_algebra_presentation(bergman_presentation(b.data, level));
    if (opt.json_out())
        out << json{{"command", "berg"}, {"level", level}, {"presentation", text}}.dump(2) << "\n";
    else
        out << text;
    return exit_ok;
}

int cmd_to_hypergraph(const Options& opt, const std::string& file, std::ostream& out) {
    auto doc = parse(slurp(file));
    const auto& b = doc_as<BergmanDoc>(doc, "bergman");
    BergmanToHypergraph res = bergman_to_hypergraph(b.data);
    res.hypergraph.name = b.name;
    std::string text = print_hypergraph(res.hypergraph, res.weights);
    if (opt.json_out())
        out << json{{"command", "to-hypergraph"}, {"hypergraph", text}}.dump(2) << "\n";
    else
        out << text;
    return exit_ok;
}

int cmd_to_bergman(const Options& opt, const std::string& file, std::ostream& out) {
    auto doc = parse(slurp(file));
    const auto& h = doc_as<HypergraphDoc>(doc, "hypergraph");
    BergmanData data = hypergraph_to_bergman(h.hypergraph, h.weights, opt.field());
    std::string text = print_bergman(h.hypergraph.name, data);
    if (opt.json_out())
        out << json{{"command", "to-bergman"}, {"bergman", text}}.dump(2) << "\n";
    else
        out << text;
    return exit_ok;
}

int cmd_smash(const Options& opt, const std::string& file, const std::string& window,
              std::ostream& out) {
    auto doc = parse(slurp(file));
    const auto& b = doc_as<BergmanDoc>(doc, "bergman");
    std::vector<GradeElement> a = parse_element_list(b.data.group, window);
    SmashCheckReport rep = propbergsmash_check(b.data, a);

    bool any_unknown = false;
    json obligations = json::array();
    for (const auto& ob : rep.obligations) {
        if (!ob.proof.proved) any_unknown = true;
        obligations.push_back({{"identity", ob.description},
                               {"proved", ob.proof.proved},
                               {"rounds", ob.proof.rounds_used}});
    }
    if (opt.json_out()) {
        out << json{{"command", "smash"},
                    {"ta", print_algebra_presentation(rep.ta)},
                    {"ba", print_algebra_presentation(rep.ba)},
                    {"obligations", obligations},
                    {"rename_equal", rep.rename.equal},
                    {"pass", rep.pass}}
                   .dump(2)
            << "\n";
    } else {
        out << "T_A:\n" << print_algebra_presentation(rep.ta);
        out << "B_A:\n" << print_algebra_presentation(rep.ba);
        for (const auto& ob : rep.obligations)
            out << "obligation " << ob.description << ": "
                << (ob.proof.proved ? "Proved" : "Unknown") << " (rounds "
                << ob.proof.rounds_used << ")\n";
        out << "rename-equal: " << (rep.rename.equal ? "yes" : "no") << "\n";
        out << "pass: " << (rep.pass ? "yes" : "no") << "\n";
    }
    if (any_unknown) return exit_unknown;
    return rep.pass ? exit_ok : exit_error;
}

int cmd_chain_check(const Options& opt, const std::string& file, std::ostream& out) {
    auto doc = parse(slurp(file));
    const auto& g = doc_as<GraphDoc>(doc, "graph");
    ChainReport rep = localization_chain_check(g.graph, opt.field());
    if (opt.json_out()) {
        out << json{{"command", "chain-check"},
                    {"path_algebra", print_algebra_presentation(rep.path_algebra)},
                    {"bergman_level4", print_algebra_presentation(rep.bergman_level4)},
                    {"hyper_lpa", print_algebra_presentation(rep.hyper_lpa)},
                    {"lpa", print_algebra_presentation(rep.lpa)},
                    {"bergman_vs_hyper", rep.bergman_vs_hyper.equal},
                    {"hyper_vs_lpa", rep.hyper_vs_lpa.equal},
                    {"pass", rep.pass}}
                   .dump(2)
            << "\n";
    } else {
        out << "bergman-vs-hyper: " << (rep.bergman_vs_hyper.equal ? "pass" : "fail") << "\n";
        out << "hyper-vs-lpa: " << (rep.hyper_vs_lpa.equal ? "pass" : "fail") << "\n";
        out << "pass: " << (rep.pass ? "yes" : "no") << "\n";
    }
    return rep.pass ? exit_ok : exit_error;
}

int cmd_grading(const Options& opt, const std::string& file, std::ostream& out) {
    auto doc = parse(slurp(file));
    const auto& h = doc_as<HypergraphDoc>(doc, "hypergraph");
    GradingReport rep = grading_structure_check(h.hypergraph, h.weights, opt.budget);
    if (opt.json_out()) {
        out << json{{"command", "grading"},
                    {"strongly_graded", decision_json(rep.strongly_graded)},
                    {"crossed_product", decision_json(rep.crossed_product)}}
                   .dump(2)
            << "\n";
    } else {
        print_decision(out, "strongly-graded", rep.strongly_graded);
        print_decision(out, "crossed-product", rep.crossed_product);
    }
    if (rep.strongly_graded.verdict == Verdict::Unknown ||
        rep.crossed_product.verdict == Verdict::Unknown)
        return exit_unknown;
    return exit_ok;
}

int cmd_hom_search(const Options& opt, const std::string& file_e, const std::string& file_f,
                   const HomBounds& bounds, bool pointed, std::ostream& out) {
    auto doc_e = parse(slurp(file_e));
    auto doc_f = parse(slurp(file_f));
    const auto& e = doc_as<GraphDoc>(doc_e, "graph");
    const auto& f = doc_as<GraphDoc>(doc_f, "graph");
    auto cert = hom_search(e.graph, f.graph, bounds, pointed, opt.budget.depth);
    GradeGroup z = GradeGroup::integers();
    if (!cert) {
        if (opt.json_out())
            out << json{{"command", "hom-search"}, {"found", false}, {"result", "none within bounds"}}
                       .dump(2)
                << "\n";
        else
            out << "none within bounds\n";
        return exit_unknown;
    }
    if (opt.json_out()) {
        json phi = json::object();
        for (const auto& [v, w] : cert->assignment) phi[v] = format_word(z, w);
        json transcript = json::array();
        for (const auto& t : cert->transcript)
            transcript.push_back({{"relation", t.label},
                                  {"lhs", format_word(z, t.lhs_image)},
                                  {"rhs", format_word(z, t.rhs_image)},
                                  {"decision", decision_json(t.decision)}});
        out << json{{"command", "hom-search"},
                    {"found", true},
                    {"assignment", phi},
                    {"pointed", cert->pointed},
                    {"nonvanishing", cert->nonvanishing},
                    {"transcript", transcript}}
                   .dump(2)
            << "\n";
    } else {
        out << "found pointed=" << (cert->pointed ? "yes" : "no")
            << " nonvanishing=" << (cert->nonvanishing ? "yes" : "no") << "\n";
        for (const auto& [v, w] : cert->assignment)
            out << "  phi(" << v << ") = " << format_word(z, w) << "\n";
        for (const auto& t : cert->transcript)
            out << "  relation " << t.label << ": " << verdict_name(t.decision.verdict) << "\n";
        out << "note: the algebra homomorphism inducing this map exists but is not constructed\n";
    }
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"computations with graded monoids, Bergman algebras and hyper Leavitt path "
                 "algebras"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--budget-states", opt.budget.max_states, "closure search state cap");
    app.add_option("--budget-len", opt.budget.max_len, "word length cap");
    app.add_option("--shift-window", opt.budget.shift_window, "shift window radius");
    app.add_option("--depth", opt.budget.depth, "graph-engine depth");
    app.add_option("--field", opt.field_str, "coefficient field: Q or Fp:<p>");
    app.add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string file, file2, w1, w2, window = "0";
    int level = 4;
    HomBounds bounds;
    bool pointed = false;

    auto* decide = app.add_subcommand("decide", "decide equality of two monoid words");
    decide->add_option("monoid-file", file)->required();
    decide->add_option("w1", w1)->required();
    decide->add_option("w2", w2)->required();

    auto* talented = app.add_subcommand("talented", "talented monoid of a graph");
    talented->add_option("graph-file", file)->required();

    auto* vmon = app.add_subcommand("vmon", "graded V-monoid of a hypergraph");
    vmon->add_option("hypergraph-file", file)->required();

    auto* realize_cmd = app.add_subcommand("realize", "realize a pointed monoid as a hypergraph");
    realize_cmd->add_option("monoid-file", file)->required();

    auto* berg = app.add_subcommand("berg", "Bergman algebra presentation");
    berg->add_option("bergman-file", file)->required();
    berg->add_option("--level", level)->check(CLI::Range(1, 4));

    auto* tohyper = app.add_subcommand("to-hypergraph", "Bergman data to hypergraph");
    tohyper->add_option("bergman-file", file)->required();

    auto* toberg = app.add_subcommand("to-bergman", "hypergraph to Bergman data");
    toberg->add_option("hypergraph-file", file)->required();

    auto* smash = app.add_subcommand("smash", "smash pieces T_A, B_A with the equality check");
    smash->add_option("bergman-file", file)->required();
    smash->add_option("--window", window, "comma-separated grade elements");

    auto* chain = app.add_subcommand("chain-check", "path algebra localization chain");
    chain->add_option("graph-file", file)->required();

    auto* grading = app.add_subcommand("grading", "strongly-graded / crossed-product report");
    grading->add_option("hypergraph-file", file)->required();

    auto* hom = app.add_subcommand("hom-search", "pointed Z-monoid homomorphism search");
    hom->add_option("graph-file-E", file)->required();
    hom->add_option("graph-file-F", file2)->required();
    hom->add_option("--max-coeff", bounds.max_coeff);
    hom->add_option("--shift-radius", bounds.shift_radius);
    hom->add_option("--max-support", bounds.max_support);
    hom->add_flag("--pointed", pointed);

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }

    try {
        opt.budget.validate();
        if (decide->parsed()) return cmd_decide(opt, file, w1, w2, out);
        if (talented->parsed()) return cmd_talented(opt, file, out);
        if (vmon->parsed()) return cmd_vmon(opt, file, out);
        if (realize_cmd->parsed()) return cmd_realize(opt, file, out);
        if (berg->parsed()) return cmd_berg(opt, file, level, out);
        if (tohyper->parsed()) return cmd_to_hypergraph(opt, file, out);
        if (toberg->parsed()) return cmd_to_bergman(opt, file, out);
        if (smash->parsed()) return cmd_smash(opt, file, window, out);
        if (chain->parsed()) return cmd_chain_check(opt, file, out);
        if (grading->parsed()) return cmd_grading(opt, file, out);
        if (hom->parsed()) return cmd_hom_search(opt, file, file2, bounds, pointed, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return exit_error;
    } catch (const spec_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }
    err << "error: no subcommand\n";
    return exit_error;
}

} // namespace gkt::cli
