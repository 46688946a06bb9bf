#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "dw/cli.hpp"

using namespace dw;

static int run_text(const std::string& cfg, std::string& out, std::string& err) {
    std::ostringstream o, e;
    int rc;
    try {
        rc = run(parse_config(cfg), o, e);
    } catch (const ConfigError& ex) {
        e << ex.what();
        rc = 2;
    }
    out = o.str();
    err = e.str();
    return rc;
}

TEST_CASE("config parsing rejects unknown fields") {
    CHECK_THROWS_AS(parse_config(R"({"group":2,"colour":1})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"group":2,"cocycle":[{"type":"I","n":1,"x":0}]})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"group":2,"mode":"dance"})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"group":"S4"})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"group":"S3","cocycle":[{"type":"I"}]})"), ConfigError);
    CHECK_THROWS_AS(parse_config("not json"), ConfigError);
    auto c = parse_config(R"({"group":[2,"S3"],"cocycle":[{"type":"S3","i":1,"p":2}],"boundary":{"generators":[[1,"t"]]}})");
    REQUIRE(c.model);
    CHECK(c.model->G.n == 12);
    CHECK(c.boundary->generators == std::vector<std::string>{"(1,t)"});
}

TEST_CASE("spec examples") {
    std::string out, err;
    CHECK(run_text(R"({"group":2,"mode":"gsd"})", out, err) == 0);
    CHECK(out == "4\n");
    CHECK(run_text(R"({"group":1,"mode":"anyons"})", out, err) == 0);
    CHECK(std::count(out.begin(), out.end(), '\n') == 2);  // header + vacuum
    CHECK(run_text(R"({"group":"S3","boundary":{"generators":["t"]},"mode":"fusion-table"})", out, err) == 0);
    CHECK(out.rfind("anyon,\"(H,0)\",\"(H,1)\",\"(r,0)\"\n", 0) == 0);
}

TEST_CASE("exit codes") {
    std::string out, err;
    CHECK(run_text(R"({"group":"S3","cocycle":[{"type":"S3","p":1}],"boundary":{"generators":["r"]},"mode":"fusion-table"})",
                   out, err) == 3);
    CHECK(out.empty());
    CHECK(run_text(R"({"group":2,"mode":"fusion-table"})", out, err) == 2);
    CHECK(run_text(R"({"group":2,"boundary":{"generators":["q"]},"mode":"fusion-table"})", out, err) == 2);
}

TEST_CASE("output is deterministic and json round-trips") {
    std::string cfg = R"({"group":[2,2],"cocycle":[{"type":"II","i":0,"j":1,"n":1}],"boundary":{"generators":[[0,1]]},"mode":"fusion-table","format":"json"})";
    std::string a, b, err;
    REQUIRE(run_text(cfg, a, err) == 0);
    REQUIRE(run_text(cfg, b, err) == 0);
    CHECK(a == b);
    FusionTable t = fusion_table_from_json(a);
    CHECK(fusion_table_json(t) == a);
    CHECK(t.rows.size() == 16u);
    for (auto fmt : {"csv", "markdown"}) {
        std::string c2 = cfg;
        c2.replace(c2.find("\"json\""), 6, std::string("\"") + fmt + "\"");
        REQUIRE(run_text(c2, a, err) == 0);
        REQUIRE(run_text(c2, b, err) == 0);
        CHECK(a == b);
    }
}

TEST_CASE("csv quoting") {
    CHECK(table_csv({"(a,b)"}, {"x", "y\"z"}, {{1, 2}}) == "anyon,x,\"y\"\"z\"\n\"(a,b)\",1,2\n");
}

TEST_CASE("golden suites exist") {
    CHECK(golden_suites().size() == 3u);
    CHECK(verify_golden("appendixA").size() == 5u);
    for (auto& r : verify_golden("appendixA")) CHECK(r.pass);
    CHECK_THROWS_AS(verify_golden("nope"), ConfigError);
}
