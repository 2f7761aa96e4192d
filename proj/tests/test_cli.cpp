#include <catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <string>

// Drives the installed binary end to end and checks the exit-code contract:
// 0 verdict pass, 1 verdict failure, 2 input error.

namespace {

using nlohmann::json;

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

int run(const std::string& args) {
    std::string cmd = std::string(LAXCLI_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

json run_json(const std::string& args, const std::string& out_file) {
    std::string cmd =
        std::string(LAXCLI_PATH) + " " + args + " --out " + out_file + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    std::ifstream in(out_file);
    REQUIRE(in.good());
    json j;
    in >> j;
    return j;
}

} // namespace

TEST_CASE("catalog lists the built-in algebras") {
    REQUIRE(run("catalog") == 0);
    json j = run_json("catalog", "/tmp/laxcli_catalog.json");
    REQUIRE(j["ok"].get<bool>());
    REQUIRE(j["algebras"].size() >= 6);
    for (const auto& a : j["algebras"]) REQUIRE(a["jacobi"].get<bool>());
}

TEST_CASE("identity checks report pass and fail verdicts") {
    REQUIRE(run("check jacobi sl2") == 0);
    REQUIRE(run("check jacobi broken-sl2") == 1);
    REQUIRE(run("check form sl2") == 0);
    REQUIRE(run("check form heisenberg3") == 1); // degenerate pairing
    REQUIRE(run("check cybe aff1 r-wedge") == 0);
    REQUIRE(run("check cybe sl2 casimir") == 1);
    REQUIRE(run("check ecybe sl2 casimir --epsilon 1/4") == 0);
    REQUIRE(run("check ecybe sl2 casimir --epsilon 1/2") == 1);
    REQUIRE(run("check bialgebra aff1 r-wedge") == 0);
    REQUIRE(run("check rota-baxter sl2 minus-borel --weight 1") == 0);
    REQUIRE(run("check rota-baxter sl2 minus-borel --weight 2") == 1);
    REQUIRE(run("check baxter sl2 minus-borel") == 1);
    REQUIRE(run("check nijenhuis sl2 minus-borel") == 0);
}

TEST_CASE("classification is reported, not judged") {
    json j = run_json("check classify sl2 casimir", "/tmp/laxcli_classify.json");
    REQUIRE(j["ok"].get<bool>());
    REQUIRE(j["class"].get<std::string>() == "coboundary-only");
    json k = run_json("check classify aff1 r-wedge", "/tmp/laxcli_classify2.json");
    REQUIRE(k["class"].get<std::string>() == "triangular");
}

TEST_CASE("structured inputs drive the operator checks") {
    REQUIRE(run("check o-op --input " + fixture("context.json")) == 0);
    REQUIRE(run("check ext-o-op --input " + fixture("context_ext.json")) == 0);
    REQUIRE(run("check triple --input " + fixture("datum.json")) == 0);
    REQUIRE(run("check ansatz --input " + fixture("datum.json")) == 0);
    REQUIRE(run("check curvature --input " + fixture("context_ext.json")) == 0);
    REQUIRE(run("check postlie --input " + fixture("postlie.json")) == 0);
    REQUIRE(run("check postlie --input " + fixture("postlie_bad.json")) == 1);
    REQUIRE(run("check trialgebra --input " + fixture("trialgebra.json")) == 0);
}

TEST_CASE("constructions emit verified structures") {
    json d = run_json("construct double aff1 r-wedge", "/tmp/laxcli_double.json");
    REQUIRE(d["ok"].get<bool>());
    REQUIRE(d["graph_bracket"].get<bool>());
    REQUIRE(d["algebra"]["dim"].get<int>() == 4);

    json e = run_json("construct extension aff1 r-wedge", "/tmp/laxcli_ext.json");
    REQUIRE(e["ok"].get<bool>());
    REQUIRE(e["isomorphism"].get<bool>());

    json f = run_json("construct family aff1 r-wedge --family J --params 1,0",
                      "/tmp/laxcli_family.json");
    REQUIRE(f["ok"].get<bool>());
    REQUIRE(f["square"].get<int>() == -1);
    REQUIRE(f["class_plus"].get<std::string>() == "type-II-quasitriangular");

    REQUIRE(run("construct family aff1 r-wedge --family Rmu --params 2") == 0);
    REQUIRE(run("construct family aff1 r-wedge --family N --params 3,2,1,-2") == 0);

    json p = run_json("construct postlie --from borel sl2", "/tmp/laxcli_postlie.json");
    REQUIRE(p["ok"].get<bool>());
    REQUIRE(p["matches_closed_form"].get<bool>());
    REQUIRE(p["table"]["dim"].get<int>() == 3);

    REQUIRE(run("construct postlie --from rota-baxter sl3 minus-borel") == 0);
    REQUIRE(run("construct complexify sl2") == 0);
    REQUIRE(run("construct semidirect sl2") == 0);
}

TEST_CASE("simulation writes a trajectory with a small drift") {
    json t = run_json(
        "simulate --datum sl2-borel --state 0.3,0.7,-0.2 --h 0.01 --steps 100",
        "/tmp/laxcli_traj.json");
    REQUIRE(t["ok"].get<bool>());
    REQUIRE(t["states"].size() == 101);
    REQUIRE(t["L"].size() == 101);
    REQUIRE(t["drift"]["hamiltonian"].get<double>() < 1e-8);
}

TEST_CASE("input errors exit with code two") {
    REQUIRE(run("check jacobi no-such-algebra") == 2);
    REQUIRE(run("check o-op --input /no/such/file.json") == 2);
    REQUIRE(run("check o-op --input " + fixture("bad.json")) == 2);
    REQUIRE(run("check frobnicate sl2") == 2);
    REQUIRE(run("construct family aff1 r-wedge --family J --params 1") == 2);
    REQUIRE(run("simulate --datum no-such-datum") == 2);
    REQUIRE(run("simulate") == 2); // missing required option
    REQUIRE(run("check tensor-shape @" + fixture("datum.json")) == 2);
}
