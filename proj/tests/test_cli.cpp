#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "rtl/auslander_catalog.hpp"
#include "rtl/common.hpp"
#include "rtl/io.hpp"
#include "rtl/verify.hpp"

using namespace rtl;
using nlohmann::json;

namespace {

struct Run {
    int status;
    std::string out;
};

Run rtl_cmd(const std::string& args) {
    const char* bin = std::getenv("RTL_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "RTL_BIN must point at the rtl binary");
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const std::string& name) { return std::string(RTL_FIXTURES_DIR) + "/" + name; }

}  // namespace

TEST_CASE("presentation JSON round trip") {
    for (const auto& id : {"A{m}", "A{2,n}", "A{q,n}", "Xbre"}) {
        Presentation p = catalog_presentation(id, {6, 4}).presentation;
        json j = presentation_to_json(p);
        Presentation back = presentation_from_json(j);
        CHECK(presentation_to_json(back) == j);
    }
}

TEST_CASE("presentation JSON accepts the documented variants") {
    json j = json::parse(R"({"vertices": [1, 2], "arrows": [{"id": "a", "src": 1, "tgt": 2}, {"id": "b", "src": 2, "tgt": 1}],
        "relations": [[{"c": "1", "path": ["a", "b"]}], [{"c": 2, "word": "a b"}, {"c": "-3/2", "path": ["a", "b"]}]]})");
    CHECK_THROWS_AS(presentation_from_json(j), PreconditionError);  // "a b" runs 2 -> 2, "b a" runs 1 -> 1
    j["relations"] = json::parse(R"([[{"c": "1", "path": ["a", "b"]}], [{"c": 2, "word": "a b a b"}]])");
    Presentation p = presentation_from_json(j);
    REQUIRE(p.relations.size() == 2);
    CHECK(display_path(p.quiver, p.relations[0].terms[0].path) == "b a");
    CHECK(p.relations[1].terms[0].c == 2);

    CHECK_THROWS_AS(presentation_from_json(json::parse(R"({"vertices": [1]})")), PreconditionError);
    CHECK_THROWS_AS(presentation_from_json(json::parse(R"({"vertices": [1], "arrows": [{"id": "a", "src": 1, "tgt": 3}]})")),
                    PreconditionError);
    CHECK_THROWS_AS(presentation_from_json(json::parse(
                        R"({"vertices": [1], "arrows": [{"id": "x", "src": 1, "tgt": 1}], "relations": [[{"c": "1/0", "path": ["x", "x"]}]]})")),
                    PreconditionError);
}

TEST_CASE("graph JSON") {
    Graph g = graph_from_json(json::parse(R"({"vertices": ["a", "b", "c", "d"], "edges": [["a","b"],["b","c"],["c","d"],["d","a"]]})"));
    CHECK(g.n == 4);
    CHECK(recognize_graph(g)[0].name() == "~A3");
    CHECK(graph_from_json(graph_to_json(g)).edges == g.edges);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices": [1], "edges": [[1, 2]]})")), PreconditionError);
}

TEST_CASE("checked-in fixtures match their generators") {
    for (const auto& [name, p] : builtin_fixtures()) {
        INFO(name);
        CHECK(load_json(fixture(name)) == presentation_to_json(p));
    }
}

TEST_CASE("cli examples") {
    auto r = rtl_cmd("classify auslander --n 5 --x 2,5");
    CHECK(r.status == 0);
    CHECK(json::parse(r.out).at("type") == "finite");

    r = rtl_cmd("quiver tits --in " + fixture("eqeqnlm.json") + " --dims 1,2,2,2,2");
    CHECK(r.status == 0);
    CHECK(json::parse(r.out) == -1);

    CHECK(rtl_cmd("classify triple --family Z --rank 1").status == 2);

    r = rtl_cmd("classify triple --family A --rank 4 --g 1,2,3 --h 2,3");
    CHECK(r.status == 0);
    CHECK(json::parse(r.out).at("case") == "tm.1.5");
    r = rtl_cmd("classify auslander --n 7 --x 6,7");
    CHECK(json::parse(r.out).at("type") == "tame");
}

TEST_CASE("cli exit codes") {
    CHECK(rtl_cmd("").status == 2);
    CHECK(rtl_cmd("classify triple --bogus 1").status == 2);
    CHECK(rtl_cmd("classify auslander").status == 2);
    CHECK(rtl_cmd("classify auslander --n 5 --x 1").status == 2);
    CHECK(rtl_cmd("quiver tits --in /nonexistent.json --dims 1").status == 2);
    CHECK(rtl_cmd("quiver tits --in " + fixture("eqeqnlm.json") + " --dims 1,2").status == 2);
    CHECK(rtl_cmd("rep enumerate --id Xprime --dims 1,1 --q 7").status == 2);
    CHECK(rtl_cmd("--help").status == 0);
}

TEST_CASE("cli subcommands") {
    auto r = rtl_cmd("classify cross-validate --family A --rank 3 --g 1,2");
    CHECK(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j.at("agree") == true);
    CHECK(j.at("r") == 4);

    r = rtl_cmd("quiver recognize --in " + fixture("eqeqnlm.json"));
    CHECK(r.status == 0);
    CHECK(json::parse(r.out).at("components").size() == 1);

    r = rtl_cmd("algebra basis --id 'A{2,n}' --n 5");
    CHECK(r.status == 0);
    CHECK(json::parse(r.out).at("dim") == verify_catalog("A{2,n}", {5, 0}).truncation_dim);

    r = rtl_cmd("algebra separated --in " + fixture("eqh1.json"));
    CHECK(json::parse(r.out).at("rad_square_type") == "infinite");
    CHECK(json::parse(r.out).at("components")[0].at("class") == "~A3");

    r = rtl_cmd("algebra fragment --in " + fixture("wconf1.json") + " --rad2");
    CHECK(json::parse(r.out).at("found") == true);
    r = rtl_cmd("algebra fragment --id 'A{3,4}_5' --n 5 --window");
    CHECK(json::parse(r.out).at("found") == true);

    r = rtl_cmd("algebra cover --id 'A{2,n}' --n 5 --lo 0 --hi 4");
    CHECK(r.status == 0);
    Presentation w = presentation_from_json(json::parse(r.out));
    CHECK(w.quiver.num_vertices() == 15);

    r = rtl_cmd("algebra present --id 'A{2,n}' --n 5 --emit json");
    CHECK(json::parse(r.out) == load_json(fixture("equequ.json")));

    r = rtl_cmd("algebra truncate --in " + fixture("equequ.json") + " --vertices 1,2");
    CHECK(r.status == 0);

    r = rtl_cmd("algebra verify --id 'A{3,m}' --n 6 --m 5");
    CHECK(json::parse(r.out).at("pass") == true);

    r = rtl_cmd("rep enumerate --id Xprime --dims 1,1 --q 2");
    CHECK(r.status == 0);
    j = json::parse(r.out);
    CHECK(j.at("classes").size() >= 1);

    r = rtl_cmd("rep indec --in " + fixture("eqbre.json") + " --max-dim 2");
    CHECK(r.status == 2);  // rep commands take --alg
    r = rtl_cmd("rep indec --alg " + fixture("eqbre.json") + " --max-dim 2");
    CHECK(r.status == 0);
    CHECK(json::parse(r.out).at("gaps").empty());

    r = rtl_cmd("rep xyu");
    CHECK(json::parse(r.out).size() == 9);

    r = rtl_cmd("verify criterion 1");
    CHECK(r.status == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("outputs are byte-stable across runs") {
    for (const std::string args : {"rep indec --id Xprime --max-dim 3", "classify cross-validate --family B --rank 3 --g 2,3 --h 1",
                                   "algebra basis --id 'A{q,n}' --n 5"}) {
        INFO(args);
        CHECK(rtl_cmd(args).out == rtl_cmd(args).out);
    }
}
