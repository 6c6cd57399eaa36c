#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Result {
    int status;
    std::string out, err;
    json j() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int st = bqf::cli::run(args, out, err);
    return {st, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("examples") {
    Result r = run({"reduce", "--mode", "gauss", R"({"a":25,"b":111,"c":-33})"});
    REQUIRE(r.status == 0);
    CHECK(r.j()["cycle"].size() == 6);

    Result h = run({"hirzebruch", "7"});
    REQUIRE(h.status == 0);
    CHECK(h.j()["h_minus_p"] == 1);
    CHECK(h.j()["brute_force"] == 1);

    Result g = run({"classgroup", "-20"});
    REQUIRE(g.status == 0);
    CHECK(g.j()["order"] == 2);
    CHECK(g.j()["identity"] == json::array({1, 0, 5}));
}

TEST_CASE("every verb reaches its module") {
    struct Row {
        std::vector<std::string> args;
        std::string key;
    };
    std::vector<Row> rows = {
        {{"reduce", "[13,30,18]"}, "reduced"},
        {{"reduce", "--mode", "zagier", "[25,111,-33]"}, "cycle"},
        {{"reduce", "--list", "[1,1,-1]"}, "z_reduced_forms"},
        {{"reduce", "--equivalent", "[-55,89,35]", "[25,111,-33]"}, "equivalent"},
        {{"cf", "--sqrt", "7", "--convergent", "4"}, "minus"},
        {{"cf", "[25,111,-33]"}, "plus"},
        {{"cf", "--qi", "[1,2,5]"}, "form_with_root"},
        {{"pell", "61"}, "t"},
        {{"pell", "7", "--m", "3"}, "u"},
        {{"hirzebruch", "23"}, "period"},
        {{"compose", "[2,1,3]", "[2,-1,3]"}, "product"},
        {{"classgroup", "229", "--table"}, "table"},
        {{"cube", "slice", R"({"cube":[0,1,2,1,1,0,-1,-3]})"}, "slices"},
        {{"cube", "from-pair", "[1,0,5]", "[2,2,3]"}, "cube"},
        {{"cube", "act", "[0,1,2,1,1,0,-1,-3]", "--ud", "[[1,1],[0,1]]"}, "forms"},
        {{"cube", "scan", "--bound", "1"}, "failures"},
        {{"cark", "[25,111,-33]"}, "code"},
        {{"represent", "[1,1,-1]", "11"}, "solutions"},
        {{"jimm", "[25,111,-33]"}, "image"},
        {{"penner", "point", "[4,-4,5]"}, "point"},
        {{"penner", "form", "--u", "1/2", "--v", "1"}, "form"},
        {{"penner", "locus", "[4,-4,5]", "[5,-4,4]"}, "locus"},
        {{"penner", "product", "[4,-4,5]", "[5,-4,4]"}, "ok"},
    };
    for (const Row& row : rows) {
        CAPTURE(row.args[0]);
        Result r = run(row.args);
        REQUIRE(r.status == 0);
        CHECK(r.j().contains(row.key));
    }
}

TEST_CASE("values in output") {
    json c = run({"cark", "[25,111,-33]"}).j();
    CHECK(c["code"] == json::array({1, 2, 1, 4, 3, 1}));
    CHECK(c["automorph"]["matrix"] == json::parse("[[7,33],[25,118]]"));
    json j = run({"jimm", "[25,111,-33]"}).j();
    CHECK(j["discriminant_factorization"] == "3*41*127");
    json p = run({"penner", "product", "[4,-4,5]", "[5,-4,4]"}).j();
    CHECK(p["product"] == json::array({20, -4, 1}));
    CHECK(p["ok"] == true);
}

TEST_CASE("big integers become strings") {
    json p = run({"pell", "4729494"}).j();
    CHECK(p["t"] == "109931986732829734979866232821433543901088049");
    CHECK(p["check"] == true);
    json s = run({"pell", "2"}).j();
    CHECK(s["t"] == 3);
}

TEST_CASE("exit codes") {
    CHECK(run({"pell", "9"}).status == 2);
    CHECK(run({"reduce", "[1,2,1]"}).status == 2);
    CHECK(run({"hirzebruch", "79"}).status == 2);
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(run({}).status == 2);
    CHECK(run({"--help"}).status == 0);
    CHECK(run({"--budget", "3", "pell", "4729494"}).status == 3);
    CHECK(run({"represent", "[1,1,-1]", "1000", "--budget", "2"}).status == 3);
    CHECK(run({"penner", "locus", "[1,0,1]", "[1,0,5]"}).status == 2);
}

TEST_CASE("malformed JSON names the position") {
    Result r = run({"reduce", R"({"a":1,"b":})"});
    CHECK(r.status == 2);
    CHECK(r.err.find("byte") != std::string::npos);
    CHECK(run({"reduce", R"({"a":1,"b":2})"}).status == 2);
    CHECK(run({"reduce", R"(["x",1,1])"}).status == 2);
}

TEST_CASE("forms from files") {
    std::string path = "cli_test_form.json";
    {
        std::ofstream o(path);
        o << R"({"a":"25","b":111,"c":-33})";
    }
    Result r = run({"cark", path});
    std::remove(path.c_str());
    REQUIRE(r.status == 0);
    CHECK(r.j()["form"] == json::array({25, 111, -33}));
}

TEST_CASE("plain format and determinism") {
    Result r = run({"--format", "plain", "classgroup", "-20"});
    REQUIRE(r.status == 0);
    CHECK(r.out.find("order: 2\n") != std::string::npos);
    CHECK(run({"classgroup", "-84"}).out == run({"classgroup", "-84"}).out);
    Result d = run({"cark", "[1,1,-1]", "--dot", "-"});
    CHECK(d.out.rfind("graph cark {", 0) == 0);
}

}  // TEST_SUITE
