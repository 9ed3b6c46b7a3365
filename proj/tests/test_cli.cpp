#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "raag/cli.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = raag::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

json result_of(const RunResult& r) {
    auto doc = json::parse(r.out);
    REQUIRE(doc["schema"] == "raag-report/1");
    return doc["result"];
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("cli_tmp_" + name) {
        std::ofstream(path) << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("invariants golden run") {
    auto r = run({"invariants", "--graph", "complete:3"});
    REQUIRE(r.code == 0);
    auto result = result_of(r);
    CHECK(result["clique_counts"] == json({3, 3, 1}));
    CHECK(result["cohomological_dimension"] == 3);
    CHECK(result["ends"] == "one");
    CHECK(result["chi_minimal_model"] == 2);
}

TEST_CASE("byte-identical output on repeated runs") {
    for (auto args : {std::vector<std::string>{"invariants", "--graph", "cycle:5"},
                      {"cohomology", "--graph", "disjoint-edges:3", "--degree", "1"},
                      {"tame", "--graph", "complete:3"},
                      {"resolution", "--graph", "path:3"},
                      {"model", "--graph", "complete:3"},
                      {"generate", "--steps", "6", "--seed", "42"},
                      {"forms", "--hyperbolic", "2"}}) {
        auto a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("cohomology shapes") {
    auto r = run({"cohomology", "--graph", "disjoint-edges:3", "--degree", "1"});
    REQUIRE(r.code == 0);
    auto result = result_of(r);
    REQUIRE(result["summands"].size() == 1);
    CHECK(result["summands"][0]["link_cohomology"]["rank"] == 2);
    CHECK(result["summands"][0]["simplex"].empty());
    CHECK(result["summands"][0]["stabilizer_rank"] == 0);

    auto special = result_of(run({"cohomology", "--graph", "complete:3", "--degree", "3"}));
    CHECK(special["special_case"]["free_abelian_rank"] == 3);
    CHECK(special["special_case"]["group"]["rank"] == 1);
}

TEST_CASE("filtration rejects the single-simplex case with exit 1") {
    auto r = run({"filtration", "--graph", "complete:3", "--degree", "2"});
    CHECK(r.code == 1);
    CHECK(r.err.find("single simplex") != std::string::npos);
}

TEST_CASE("filtration lists one quotient per simplex dimension") {
    auto r = run({"filtration", "--graph", "cycle:5", "--degree", "2"});
    REQUIRE(r.code == 0);
    auto result = result_of(r);
    REQUIRE(result["quotients"].size() == 3);
    CHECK(result["quotients"][0]["simplex_dim"] == -1);
    CHECK(result["quotients"][2]["simplex_dim"] == 1);
}

TEST_CASE("tame notes the missing automatic route on 4-cliques") {
    auto r = run({"tame", "--graph", "complete:4"});
    REQUIRE(r.code == 0);
    auto result = result_of(r);
    CHECK(result["note"].get<std::string>().find("dimension 4") != std::string::npos);
    CHECK(result["verdict"]["overall"] == "tame");
    CHECK(result["verdict"]["dual_h3"]["state"] == "holds");
}

TEST_CASE("graph loading") {
    SUBCASE("from a file") {
        TempFile f("graph.txt", "vertex a\nvertex b\nvertex c\nedge a b\nedge b c\n");
        auto r = run({"invariants", "--graph", f.path});
        REQUIRE(r.code == 0);
        CHECK(result_of(r)["clique_counts"] == json({3, 2}));
    }
    SUBCASE("bad file reports the line number and exits 1") {
        TempFile f("bad.txt", "vertex a\nedge a a\n");
        auto r = run({"invariants", "--graph", f.path});
        CHECK(r.code == 1);
        CHECK(r.err.find("line 2") != std::string::npos);
    }
    SUBCASE("unknown spec exits 1") {
        auto r = run({"invariants", "--graph", "no-such-thing:3"});
        CHECK(r.code == 1);
    }
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"cohomology", "--graph", "complete:3"}).code == 2);  // missing --degree
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"invariants"}).code == 2);  // missing --graph
}

TEST_CASE("generate is reproducible and tame") {
    auto a = run({"generate", "--steps", "9", "--seed", "7"});
    auto b = run({"generate", "--steps", "9", "--seed", "7"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    auto result = json::parse(a.out)["result"];
    CHECK(result["tame"]["overall"] == "tame");

    SUBCASE("script files replay") {
        auto text = result["script_text"].get<std::string>();
        TempFile f("script.txt", text);
        auto c = run({"generate", "--script", f.path});
        REQUIRE(c.code == 0);
        CHECK(json::parse(c.out)["graph"] == json::parse(a.out)["graph"]);
    }
}

TEST_CASE("resolution command verifies") {
    auto r = run({"resolution", "--graph", "complete:3"});
    REQUIRE(r.code == 0);
    auto result = result_of(r);
    CHECK(result["verified"] == true);
    CHECK(result["ranks"] == json({1, 3, 3, 1}));
    CHECK(result["tensor_down_betti"] == json({1, 3, 3, 1}));
    CHECK(run({"resolution", "--graph", "complete:4"}).code == 1);
}

TEST_CASE("model command") {
    auto r = run({"model", "--graph", "complete:3"});
    REQUIRE(r.code == 0);
    auto result = result_of(r);
    CHECK(result["chi"] == 2);
    CHECK(result["pi2_tensor_rank"] == 4);
    CHECK(result["pi2_dual_rank"] == 2);
    CHECK(result["stabilization_bound"] == 1);
    CHECK(result["four_term"]["h2_skeleton_is_augmentation_ideal"] == true);
}

TEST_CASE("forms command") {
    SUBCASE("hyperbolic") {
        auto r = run({"forms", "--hyperbolic", "1"});
        REQUIRE(r.code == 0);
        auto result = result_of(r);
        CHECK(result["report"]["hermitian"] == true);
        CHECK(result["report"]["strongly_even"] == true);
        CHECK(result["report"]["w"] == json({0, 0}));
    }
    SUBCASE("matrix report from a file") {
        TempFile f("form.txt", "v0 + v0^-1 ; 1\n1 ; 0\n");
        auto r = run({"forms", "--graph", "path:2", "--matrix", f.path});
        REQUIRE(r.code == 0);
        auto result = result_of(r);
        CHECK(result["report"]["hermitian"] == true);
        CHECK(result["report"]["w"] == json({0, 0}));
    }
    SUBCASE("metabolic requires even input when flagged") {
        TempFile f("delta.txt", "1\n");
        CHECK(run({"forms", "--graph", "path:2", "--metabolic", f.path, "--even"}).code == 1);
        CHECK(run({"forms", "--graph", "path:2", "--metabolic", f.path}).code == 0);
    }
    SUBCASE("stabilize") {
        TempFile f("theta.txt", "2\n");
        auto r = run({"forms", "--graph", "path:2", "--stabilize", f.path});
        REQUIRE(r.code == 0);
        auto result = result_of(r);
        CHECK(result["isometry_verified"] == true);
        CHECK(result["k"] ==
              json::array({json::array({"1", "0"}), json::array({"1", "1"})}));
    }
    SUBCASE("no mode is a usage error") {
        CHECK(run({"forms"}).code == 2);
    }
}

TEST_CASE("golden files match byte for byte") {
    auto golden = [](const std::string& name) {
        std::ifstream in(std::string(RAAG_GOLDEN_DIR) + "/" + name);
        REQUIRE(in.good());
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    CHECK(run({"invariants", "--graph", "complete:3"}).out ==
          golden("invariants_complete3.json"));
    CHECK(run({"cohomology", "--graph", "disjoint-edges:3", "--degree", "1"}).out ==
          golden("cohomology_disjoint_edges3_d1.json"));
    CHECK(run({"model", "--graph", "complete:3"}).out == golden("model_complete3.json"));
    CHECK(run({"tame", "--graph", "join:disjoint-edges:2,disjoint-edges:2"}).out ==
          golden("tame_join22.json"));
}

TEST_CASE("pretty mode emits text") {
    auto r = run({"--pretty", "invariants", "--graph", "complete:3"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("clique counts") != std::string::npos);
    CHECK(r.out.find("schema") == std::string::npos);
}

TEST_CASE("help") {
    auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("invariants") != std::string::npos);
}
