#include "dqa/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>

using namespace dqa::cli;
namespace fs = std::filesystem;

namespace {

const fs::path kTmp = fs::path(DQA_TEST_TMP) / "cli_tmp";

std::string put(const std::string& name, const std::string& text) {
    fs::create_directories(kTmp);
    const auto p = kTmp / name;
    std::ofstream(p) << text;
    return p.string();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
}

AnalysisConfig config(const std::string& command, const std::string& input) {
    AnalysisConfig c;
    c.command = command;
    c.input = input;
    return c;
}

const std::string kCycle = "0 1\n1 2\n2 0\n";
const std::string kSphere = "0 1\n0 2\n1 2\n2 1\n1 3\n2 3\n";
const std::string kStar = "1 0\n2 0\n3 0\n";

}  // namespace

TEST_CASE("ranges") {
    CHECK(parse_range("0..3") == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(parse_range("1-2") == std::vector<std::size_t>{1, 2});
    CHECK(parse_range("0,2,4") == std::vector<std::size_t>{0, 2, 4});
    CHECK_THROWS_AS(parse_range(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_range("3..1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_range("a,b"), std::invalid_argument);
}

TEST_CASE("count") {
    const auto r = run(config("count", put("cycle.txt", kCycle)));
    CHECK(r.exit_code == kOk);
    CHECK(r.out == "dim0:3 dim1:3\n");

    auto j = config("count", put("sphere.txt", kSphere));
    j.emit = "json";
    CHECK(nlohmann::json::parse(run(j).out)["counts"] == nlohmann::json{4, 6, 4});

    const auto empty = run(config("count", put("empty.txt", "# nothing\n")));
    CHECK(empty.exit_code == kOk);
    CHECK(empty.err.find("no vertices") != std::string::npos);

    auto capped = config("count", put("k5.txt", "0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n"));
    capped.max_dim = 1;
    CHECK(run(capped).out == "dim0:5 dim1:10\n");
}

TEST_CASE("input formats") {
    const auto m = run(config("count", put("cycle.csv", "0,1,0\n0,0,1\n1,0,0\n")));
    CHECK(m.out == "dim0:3 dim1:3\n");
    const auto named = run(config("count", put("named.txt", "ADAL AIBL\nAIBL AVAL\nAVAL ADAL\n")));
    CHECK(named.out == "dim0:3 dim1:3\n");
    auto forced = config("count", put("pair.txt", "0 1\n0 0\n"));
    forced.format = "matrix";
    CHECK(run(forced).out == "dim0:2 dim1:1\n");
}

TEST_CASE("parse and usage errors exit with 2, unreadable input with 1") {
    CHECK(run(config("count", put("loop.txt", "0 0\n"))).exit_code == kParseError);
    CHECK(run(config("count", (kTmp / "missing.txt").string())).exit_code == kFailure);
    CHECK(run(config("nope", put("c.txt", kCycle))).exit_code == kParseError);
    auto bad_emit = config("count", put("c.txt", kCycle));
    bad_emit.emit = "dot";
    CHECK(run(bad_emit).exit_code == kParseError);
    const auto r = run(config("count", put("bad.txt", "0 1\n1 x\n")));
    CHECK(r.exit_code == kParseError);
    CHECK(r.err.find("2") != std::string::npos);
}

TEST_CASE("guard exits with 3") {
    std::string k7;
    for (int a = 0; a < 7; ++a) {
        for (int b = a + 1; b < 7; ++b) {
            k7 += std::to_string(a) + " " + std::to_string(b) + "\n";
        }
    }
    auto c = config("count", put("k7.txt", k7));
    c.guard = 20;
    const auto r = run(c);
    CHECK(r.exit_code == kGuardExceeded);
    CHECK(r.err.find("partial counts") != std::string::npos);
}

TEST_CASE("classic") {
    const auto r = run(config("classic", put("cycle.txt", kCycle)));
    CHECK(r.out == "Q=(3,1) N=(3,6) T=(0,5/6) Qhat=(2,0) betti=(1,1)\n");
    CHECK(run(config("classic", put("star.txt", kStar))).out.rfind("Q=(3,1)", 0) == 0);
    auto csv = config("classic", put("cycle.txt", kCycle));
    csv.emit = "csv";
    CHECK(run(csv).out.rfind("vector,q1,q0\nQ,3,1\n", 0) == 0);
}

TEST_CASE("qgraph and communities") {
    auto q = config("qgraph", put("cycle.txt", kCycle));
    q.q = 1;
    CHECK(run(q).out == "q=1 nodes=3 edges=0 components=3\n");
    auto dot = q;
    dot.emit = "dot";
    CHECK(run(dot).out.rfind("graph", 0) == 0);

    const auto c = run(config("communities", put("shared.txt", "0 1\n1 2\n2 0\n1 3\n3 2\n")));
    CHECK(c.exit_code == kOk);
    CHECK(std::count(c.out.begin(), c.out.end(), '\n') == 1);
}

TEST_CASE("pm-check") {
    auto tetra = config("pm-check", put("tetra.cx", "0 1 2\n0 1 3\n0 2 3\n1 2 3\n"));
    tetra.format = "complex";
    tetra.n = 2;
    CHECK(run(tetra).out.rfind("pseudomanifold=yes with_boundary=no", 0) == 0);

    auto cycle = config("pm-check", put("cycle.txt", kCycle));
    cycle.n = 1;
    cycle.directed = true;
    CHECK(run(cycle).out.rfind("pseudomanifold=yes", 0) == 0);

    auto sphere = config("pm-check", put("sphere.txt", kSphere));
    sphere.n = 2;
    sphere.directed = true;
    sphere.dj = 2;
    const auto r = run(sphere);
    CHECK(r.exit_code == kOk);
    CHECK(r.out.rfind("pseudomanifold=no", 0) == 0);
}

TEST_CASE("dq-build and condense") {
    const auto b = run(config("dq-build", put("cycle.txt", kCycle)));
    CHECK(b.out == "(0,0,1) nodes=6 edges=9\n");

    auto c = config("condense", put("sphere.txt", kSphere));
    c.q = 1;
    c.di = 1;
    c.dj = 2;
    CHECK(run(c).out == "(1,1,2) components=9 edges=10\n");

    auto j = config("dq-build", put("star.txt", kStar));
    j.dj = 0;
    j.emit = "json";
    const auto summary = nlohmann::json::parse(run(j).out);
    CHECK(summary["edges"] == 12);
    CHECK(summary["scc_count"] == 5);

    auto dot = config("condense", put("star.txt", kStar));
    dot.emit = "dot";
    CHECK(run(dot).out.rfind("digraph", 0) == 0);
}

TEST_CASE("paths") {
    auto p = config("paths", put("sphere.txt", kSphere));
    p.q = 1;
    p.dj = 2;
    CHECK(run(p).out == "(1,0,2) length=3 fraction=1\n");

    auto grid = p;
    grid.di_range = std::vector<std::size_t>{0, 1};
    grid.dj_range = std::vector<std::size_t>{1, 2};
    grid.emit = "csv";
    grid.threads = 2;
    const auto g = run(grid);
    CHECK(g.exit_code == kOk);
    CHECK(g.out.find("# lengths q=1") != std::string::npos);
    CHECK(g.out.find("# fractions q=1") != std::string::npos);

    auto high = p;
    high.q = 5;
    const auto h = run(high);
    CHECK(h.exit_code == kOk);
    CHECK(h.err.find("nothing to compute") != std::string::npos);

    auto dump = p;
    dump.dump_paths = (kTmp / "dump").string();
    run(dump);
    const auto report = nlohmann::json::parse(slurp(kTmp / "dump" / "path_q1_i0_j2.json"));
    CHECK(report["length"] == 3);
    CHECK(report["simplices"].size() == 3);
}

TEST_CASE("topology") {
    auto t = config("topology", put("sphere.txt", kSphere));
    t.q = 1;
    t.di = 1;
    t.dj = 2;
    CHECK(run(t).out == "(1,1,2) betti=(1,2) height=1\n");
}

TEST_CASE("convert writes an edge list and a label map") {
    auto c = config("convert", put("named.txt", "ADAL AIBL\nAIBL AVAL\n"));
    c.out = (kTmp / "converted.txt").string();
    c.map_out = (kTmp / "labels.txt").string();
    CHECK(run(c).exit_code == kOk);
    CHECK(slurp(kTmp / "converted.txt").find("0 1") != std::string::npos);
    CHECK(slurp(kTmp / "labels.txt").find("2 AVAL") != std::string::npos);
    CHECK(run(config("count", c.out)).out == "dim0:3 dim1:2\n");
}
