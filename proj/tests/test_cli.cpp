#include "nilbu/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = nilbu::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    const auto r = run(args);
    REQUIRE(r.code == 0);
    return nlohmann::json::parse(r.out);
}

} // namespace

TEST_CASE("classify") {
    const auto r = run({"classify", "SF(0;+1;0;(6,5)(3,1)(2,1))"});
    CHECK(r.code == 0);
    CHECK(r.out == "236(0;1,5)\n");

    const auto not_nil = run({"classify", "SF(0; +1; 2)"});
    CHECK(not_nil.code == 1);
    CHECK(not_nil.err.find("NotNil") != std::string::npos);

    const auto reversed = run({"classify", "SF(-3; +1; 2)"});
    CHECK(reversed.code == 1);

    const auto j = run_json({"classify", "SF(-1; +1; 0; (2,1)(2,1)(2,1)(2,1))"});
    CHECK(j["manifold"] == "2222(-1)");
}

TEST_CASE("parse failures are domain errors") {
    CHECK(run({"h1", "Q(1)"}).code == 1);
    CHECK(run({"h1", "T(0)"}).code == 1);
    CHECK(run({"cover", "T(3)", "--phi", "{\"v\":[0,0],\"h\":1}"}).code == 1);
    CHECK(run({"cover", "T(3)", "--phi", "17"}).code == 1);
    CHECK(run({"h1", "T(1)", "--format", "xml"}).code != 0);
    CHECK(run({}).code != 0);
}

TEST_CASE("h1") {
    const auto j = run_json({"h1", "22(1)"});
    CHECK(j["free_rank"] == 0);
    CHECK(j["torsion"] == nlohmann::json::array({4, 4}));
    CHECK(j["gen_images"].size() == 4);
    CHECK(run({"h1", "T(6)"}).out.find("Z^2 + Z_6") != std::string::npos);
}

TEST_CASE("epis") {
    const auto j = run_json({"epis", "K(2)"});
    CHECK(j["epimorphisms"].size() == 7);
    CHECK(j["classes"].size() == 3);
}

TEST_CASE("cover and index") {
    const auto c = run_json({"cover", "T(3)", "--phi", "{\"v\":[1,0],\"h\":0}"});
    CHECK(c["base"] == "T(3)");
    CHECK(c["cover"] == "T(6)");
    CHECK(c["index"] == 1);

    const auto r = run({"index", "T(2)", "--phi", "{\"v\":[0,0],\"h\":1}"});
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, 2) == "3\n");
    const auto j = run_json({"index", "T(2)", "--phi", "{\"v\":[0,0],\"h\":1}"});
    CHECK(j["index"] == 3);
}

TEST_CASE("involutions") {
    const auto none = run({"involutions", "236(0;1,1)"});
    CHECK(none.code == 0);
    CHECK(none.out.find("does not support any free involution") != std::string::npos);
    const auto j = run_json({"involutions", "236(0;1,1)"});
    CHECK(j["quotients"].empty());

    const auto four = run_json({"involutions", "2222(4)"});
    REQUIRE(four["quotients"].size() == 4);
    for (const auto& q : four["quotients"])
        CHECK(q["index"] == 2);
    CHECK(run({"involutions", "2222(4)"}).out.find("244(2;1,1)") != std::string::npos);
}

TEST_CASE("table and verify") {
    const auto t = run({"table", "--b-max", "2"});
    CHECK(t.code == 0);
    CHECK(t.out.find("2222(b)") != std::string::npos);
    CHECK(t.out.find("2b+4") != std::string::npos);

    const auto first = run({"verify", "--b-max", "3", "--format", "json"});
    const auto second = run({"verify", "--b-max", "3", "--format", "json"});
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(nlohmann::json::parse(first.out)["ok"] == true);
}
