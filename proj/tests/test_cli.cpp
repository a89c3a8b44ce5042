#include "cli.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>
#include <thhseg/chart.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = thhseg::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("eval examples") {
    CHECK(run({"eval", "--op", "gamma", "--class", "s(xi1)", "--spectrum", "bp", "--p", "3"}).out ==
          "t^4 ⊗ xi1^2*s(xi1)  [leading term, filtration -8]\n");
    CHECK(run({"eval", "--op", "epsilon", "--class", "m1"}).out == "1 ⊗ m1  [exact]\n");
    CHECK(run({"eval", "--op", "d2", "--class", "t^0*m1"}).out == "t ⊗ s(m1)  [exact]\n");
    CHECK(run({"eval", "--op", "coproduct", "--class", "xi1"}).out == "xi1 ⊗ 1 + 1 ⊗ xi1  [exact]\n");
    CHECK(run({"eval", "--op", "sp", "--r", "1", "--class", "xi1", "--spectrum", "bp"}).out == "-1  [exact]\n");
    CHECK(run({"eval", "--op", "epsilon", "--class", "xi2", "--spectrum", "bp"}).out ==
          "t^-8 ⊗ 1 + t^-2 ⊗ xi1^3 + 1 ⊗ xi2  [exact]\n");

    const auto j = nlohmann::json::parse(
        run({"eval", "--op", "gamma", "--class", "s(m1)", "--format", "json"}).out);
    CHECK(j["schema"] == "thhseg.eval/1");
    CHECK(j["result"] == "-t^2 ⊗ m1^2*s(m1)");
}

TEST_CASE("exit codes") {
    CHECK(run({"verify", "--suite", "hochschild"}).code == 0);
    CHECK(run({"verify", "--suite", "steenrod", "--p", "3", "--k-max", "2"}).code == 0);
    CHECK(run({"verify", "--p", "2"}).code == 2);
    CHECK(run({"verify", "--suite", "nope"}).code == 2);
    CHECK(run({"verify", "--floor", "5"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"eval", "--op", "sp", "--class", "xi1"}).code == 2);
    CHECK(run({"--help"}).code == 0);

    auto bad = run({"eval", "--op", "epsilon", "--class", "m1 + * m2"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("position 5") != std::string::npos);
    CHECK(run({"eval", "--op", "epsilon", "--class", "m9"}).code == 2);

    const std::vector<std::string> probe = {"verify", "--suite", "segal", "--spectrum", "bp", "--k-max", "2",
                                            "--degree-max", "16", "--floor", "-8", "--reindex-shift", "1"};
    CHECK(run(probe).code == 1);

    ::setenv("THHSEG_MAX_BASIS", "20", 1);
    CHECK(run({"chart", "--floor", "-24", "--degree-max", "48"}).code == 3);
    CHECK(run({"verify", "--suite", "segal"}).code == 3);
    ::setenv("THHSEG_MAX_BASIS", "many", 1);
    CHECK(run({"verify", "--suite", "hochschild"}).code == 2);
    ::unsetenv("THHSEG_MAX_BASIS");
}

TEST_CASE("verify output") {
    const auto r = run({"verify", "--suite", "segal", "--spectrum", "bp", "--k-max", "2", "--degree-max", "40",
                        "--floor", "-24"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["schema"] == "thhseg.report/1");
    CHECK(j["checks"].size() > 100);

    const auto text = run({"verify", "--suite", "kappa", "--format", "text"});
    CHECK(text.out.find("PASS: ") != std::string::npos);
    const auto tsv = run({"verify", "--suite", "kappa", "--format", "tsv"});
    CHECK(tsv.out.rfind("id\tstatus\tanchor\tcounterexample\n", 0) == 0);
    CHECK(run({"verify", "--suite", "kappa", "--format", "svg"}).code == 2);

    const std::vector<std::string> tate = {"verify", "--suite", "tate", "--spectrum", "mu", "--degree-max", "24",
                                           "--floor", "-12", "--seed", "7"};
    CHECK(run(tate).out == run(tate).out);
    auto threaded = std::vector<std::string>{"verify", "--suite", "segal", "--spectrum", "mu", "--degree-max", "20",
                                             "--floor", "-10"};
    const auto one = run(threaded).out;
    threaded.insert(threaded.end(), {"--threads", "3"});
    CHECK(run(threaded).out == one);
}

TEST_CASE("charts through the command line") {
    const auto dir = std::filesystem::temp_directory_path() / "thhseg_cli_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "chart.json";
    const std::vector<std::string> args = {"chart", "--floor", "-8", "--degree-max", "14", "--out", path.string()};
    REQUIRE(run(args).code == 0);
    const std::string bytes = slurp(path);
    CHECK(thhseg::to_json(thhseg::chart_from_json(nlohmann::json::parse(bytes))).dump(2) + "\n" == bytes);
    REQUIRE(run(args).code == 0);
    CHECK(slurp(path) == bytes);

    for (const char* f : {"tsv", "text", "svg"}) {
        const auto a = run({"chart", "--floor", "-6", "--degree-max", "10", "--format", f});
        CHECK(a.code == 0);
        CHECK(a.out == run({"chart", "--floor", "-6", "--degree-max", "10", "--format", f}).out);
    }
    const auto empty = run({"chart", "--floor", "0", "--s-max", "-1"});
    CHECK(empty.code == 0);
    CHECK(nlohmann::json::parse(empty.out)["cells"].empty());
    CHECK(run({"chart", "--page", "5"}).code == 2);
    std::filesystem::remove_all(dir);
}

TEST_CASE("basis listing") {
    const auto r = run({"basis", "--degree-max", "4", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out == "0: 1\n1:\n2: m1\n3: s(m1)\n4: m1^2 m2\n");
}

TEST_CASE("tate-ss page") {
    const auto r = run({"tate-ss", "page", "--spectrum", "thh-mu", "--page", "3", "--floor", "-4", "--degree-max", "6"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == "thhseg.page/1");
    CHECK(j["classes"]["-2,0"] == nlohmann::json::array({"t ⊗ 1"}));
    CHECK(j["classes"]["-1,7"] == nlohmann::json::array({"u ⊗ m1^2*s(m1)"}));
    CHECK_FALSE(j["classes"].contains("0,2"));
    const auto e2 = nlohmann::json::parse(
        run({"tate-ss", "page", "--page", "2", "--floor", "-4", "--degree-max", "6"}).out);
    CHECK(e2["classes"]["0,2"] == nlohmann::json::array({"1 ⊗ m1"}));
    CHECK(run({"tate-ss", "page", "--page", "2", "--floor", "-4", "--degree-max", "6", "--format", "tsv"}).code == 0);
    CHECK(run({"tate-ss"}).code == 2);
    CHECK(run({"tate-ss", "page", "--page", "4"}).code == 2);
}
