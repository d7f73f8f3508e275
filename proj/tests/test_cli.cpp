#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = gkt::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() : dir_(fs::temp_directory_path() / fs::path("gkt_cli_test")) {
        fs::create_directories(dir_);
    }
    std::string file(const std::string& name, const std::string& content) {
        fs::path p = dir_ / name;
        std::ofstream(p) << content;
        return p.string();
    }

private:
    fs::path dir_;
};

const char* rose2_monoid = "monoid M over Z { gens: v; unit: v; rel: v = 2 v[1]; }\n";
const char* rose2_graph = "graph rose2 { vertices: v; edge e1: v -> v; edge e2: v -> v; }\n";
const char* rose4_graph = "graph rose4 { vertices: v; edge e1: v -> v; edge e2: v -> v; "
                          "edge e3: v -> v; edge e4: v -> v; }\n";
const char* rose2_hyper =
    "hypergraph rose2 over Z { vertices: v; hedge v: (v) -> (v, v) weights a=(0) b=([1], [1]); }\n";
const char* l12_bergman = "bergman L12 over Z field Q { components: v; pair v: e = [[(1)]] "
                          "shifts (0) , f = [[(1), (0)], [(0), (1)]] shifts ([1], [1]); }\n";

} // namespace

TEST_CASE("decide follows the exit-code contract") {
    TempDir tmp;
    std::string file = tmp.file("rose2.monoid", rose2_monoid);
    Run eq = run({"decide", file, "v", "2 v[1]"});
    CHECK(eq.code == 0);
    CHECK(eq.out.find("Equal") != std::string::npos);
    CHECK(eq.out.find("engine: graph") != std::string::npos);

    Run ne = run({"decide", file, "v", "3 v[1]"});
    CHECK(ne.code == 0);
    CHECK(ne.out.find("NotEqual") != std::string::npos);

    std::string closure = tmp.file("m22.monoid", "monoid M over 1 { gens: x; rel: 2 x = 4 x; }\n");
    Run unk = run({"--budget-states", "2", "decide", closure, "2 x", "5 x"});
    CHECK(unk.code == 2);
    CHECK(unk.out.find("Unknown") != std::string::npos);

    Run err = run({"decide", "missing.monoid", "v", "v"});
    CHECK(err.code == 1);
    CHECK(err.err.find("cannot open") != std::string::npos);
}

TEST_CASE("talented and vmon emit canonical monoid files") {
    TempDir tmp;
    Run t = run({"talented", tmp.file("rose2.graph", rose2_graph)});
    CHECK(t.code == 0);
    CHECK(t.out.find("rel: v = 2 v[1];") != std::string::npos);

    Run v = run({"vmon", tmp.file("rose2.hypergraph", rose2_hyper)});
    CHECK(v.code == 0);
    CHECK(v.out.find("rel: v = 2 v[1];") != std::string::npos);
}

TEST_CASE("realize emits a hypergraph and verifies the round trip") {
    TempDir tmp;
    Run ok = run({"realize", tmp.file("rose2.monoid", rose2_monoid)});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("hedge") != std::string::npos);
    CHECK(ok.out.find("verified: yes") != std::string::npos);

    std::string bad =
        tmp.file("bad.monoid", "monoid M over Z { gens: p, q; unit: p; rel: p = 2 p[1]; }\n");
    Run rej = run({"realize", bad});
    CHECK(rej.code == 1);
    CHECK(rej.err.find("sum of all generators") != std::string::npos);
}

TEST_CASE("berg and the translation subcommands") {
    TempDir tmp;
    std::string bfile = tmp.file("l12.bergman", l12_bergman);
    Run berg = run({"berg", bfile, "--level", "4"});
    CHECK(berg.code == 0);
    CHECK(berg.out.find("presentation over Z field Q unital {") != std::string::npos);
    CHECK(berg.out.find("gen v(1,1) : [1];") != std::string::npos);

    Run hyper = run({"to-hypergraph", bfile});
    CHECK(hyper.code == 0);
    CHECK(hyper.out.find("hedge v: (v) -> (v, v)") != std::string::npos);

    std::string hfile = tmp.file("rose2.hypergraph", rose2_hyper);
    Run toberg = run({"to-bergman", hfile});
    CHECK(toberg.code == 0);
    CHECK(toberg.out.find("pair v:") != std::string::npos);
}

TEST_CASE("smash reports the piece equality") {
    TempDir tmp;
    std::string bfile = tmp.file("l12.bergman", l12_bergman);
    Run s = run({"smash", bfile, "--window", "0,1"});
    CHECK(s.code == 0);
    CHECK(s.out.find("rename-equal: yes") != std::string::npos);
    CHECK(s.out.find("pass: yes") != std::string::npos);
}

TEST_CASE("chain-check and grading") {
    TempDir tmp;
    Run c = run({"chain-check", tmp.file("rose2.graph", rose2_graph)});
    CHECK(c.code == 0);
    CHECK(c.out.find("bergman-vs-hyper: pass") != std::string::npos);

    Run g = run({"grading", tmp.file("rose2.hypergraph", rose2_hyper)});
    CHECK(g.code == 0);
    CHECK(g.out.find("strongly-graded: Equal") != std::string::npos);
    CHECK(g.out.find("crossed-product: NotEqual") != std::string::npos);
}

TEST_CASE("hom-search exit codes") {
    TempDir tmp;
    std::string e2 = tmp.file("rose2.graph", rose2_graph);
    std::string e4 = tmp.file("rose4.graph", rose4_graph);
    Run found = run({"hom-search", e2, e2, "--max-coeff", "2", "--shift-radius", "1",
                     "--max-support", "1", "--pointed"});
    CHECK(found.code == 0);
    CHECK(found.out.find("phi(v) = v") != std::string::npos);

    Run none = run({"hom-search", e4, e2, "--max-coeff", "4", "--shift-radius", "2",
                    "--max-support", "3", "--pointed"});
    CHECK(none.code == 2);
    CHECK(none.out.find("none within bounds") != std::string::npos);
}

TEST_CASE("json reports round-trip through the report parser") {
    TempDir tmp;
    std::string file = tmp.file("rose2.monoid", rose2_monoid);
    for (std::vector<std::string> args :
         {std::vector<std::string>{"--format", "json", "decide", file, "v", "2 v[1]"},
          {"--format", "json", "talented", tmp.file("rose2.graph", rose2_graph)},
          {"--format", "json", "grading", tmp.file("rose2.hypergraph", rose2_hyper)},
          {"--format", "json", "smash", tmp.file("l12.bergman", l12_bergman), "--window", "0"},
          {"--format", "json", "hom-search", tmp.file("rose2.graph", rose2_graph),
           tmp.file("rose2b.graph", rose2_graph), "--pointed"}}) {
        Run r = run(args);
        CHECK(r.code == 0);
        nlohmann::json j = nlohmann::json::parse(r.out);
        CHECK(j.contains("command"));
        CHECK(nlohmann::json::parse(j.dump(2)) == j);
    }

    Run d = run({"--format", "json", "decide", file, "v", "2 v[1]"});
    nlohmann::json j = nlohmann::json::parse(d.out);
    CHECK(j["decision"]["verdict"] == "Equal");
}

TEST_CASE("bad flags and missing subcommands exit 1") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"--format", "yaml", "talented", "x"}).code == 1);
}
