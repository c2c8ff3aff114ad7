#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tmpart/cli.hpp"
#include "tmpart/json_io.hpp"

using namespace tmpart;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("tmpart_test_" + name)).string();
}

}  // namespace

TEST_CASE("construct") {
    const auto r = run_cli({"construct", "--family", "theorem11", "--l", "1"});
    CHECK(r.code == 0);
    const auto j = r.json();
    CHECK(j["m"] == 13);
    CHECK(j["intersection"] == Json::array({6, 7}));
    CHECK(j["C"] == Json::array({0, 3, 5, 6, 7, 8, 10, 13}));

    CHECK(run_cli({"construct", "--family", "theorem11", "--l", "0"}).code == 2);
    CHECK(run_cli({"construct", "--family", "nope", "--l", "1"}).code == 2);
}

TEST_CASE("solve") {
    const auto ok = run_cli({"solve", "--m", "13", "--intersection", "6,7"});
    CHECK(ok.code == 0);
    CHECK(ok.json()["status"] == "SOLVED");
    CHECK(ok.json()["fail_at"].is_null());

    const auto tail = run_cli({"solve", "--m", "14", "--intersection", "6,7"});
    CHECK(tail.code == 1);
    CHECK(tail.json()["status"] == "TAIL_FAILURE");
    CHECK(tail.json()["fail_at"] == 15);

    const auto traced = run_cli({"solve", "--m", "7", "--trace"});
    CHECK(traced.code == 0);
    CHECK(traced.json()["trace"].size() == 7);
    CHECK(traced.json()["pair"]["C"] == Json::array({0, 3, 5, 6}));

    CHECK(run_cli({"solve", "--m", "7", "--intersection", "0,3"}).code == 2);
    CHECK(run_cli({"solve", "--m", "7", "--intersection", "x"}).code == 2);
    CHECK(run_cli({"solve", "--m", "7", "--intersection", "-3"}).code == 2);
}

TEST_CASE("witness and lemmas") {
    const auto w = run_cli({"witness", "--m", "5"});
    CHECK(w.code == 0);
    CHECK(w.json()["witness"] == 6);
    CHECK(w.json()["R_A"] == 0);
    CHECK(w.json()["R_B"] == 1);
    const auto bad = run_cli({"witness", "--m", "7"});
    CHECK(bad.code == 2);
    CHECK(bad.out.empty());
    CHECK_FALSE(bad.err.empty());

    const auto l = run_cli({"lemmas", "--which", "3", "--max", "100"});
    CHECK(l.code == 0);
    CHECK(l.json()["hits"] == Json::array({7, 31}));
    const auto lb = run_cli({"lemmas", "--which", "4", "--max", "100", "--include-boundary"});
    CHECK(lb.code == 0);
    CHECK(lb.json()["boundary"].size() == 2);
    CHECK(run_cli({"lemmas", "--which", "5", "--max", "100"}).code == 2);
}

TEST_CASE("search") {
    const auto r = run_cli({"search", "--m-min", "3", "--m-max", "16", "--k", "2", "--mode", "det"});
    CHECK(r.code == 0);
    const auto j = r.json();
    CHECK(j["mode"] == "DETERMINIZED");
    REQUIRE(j["solutions"].size() == 2);
    CHECK(j["solutions"][0]["R"] == Json::array({3, 10}));

    const auto s0 = run_cli({"search", "--m-min", "3", "--m-max", "14", "--k", "2", "--mode", "brute", "--shards",
                             "3", "--shard-index", "0"});
    CHECK(s0.code == 0);
    CHECK(s0.json()["shards"]["indices"] == Json::array({0}));
    CHECK(run_cli({"search", "--m-min", "3", "--m-max", "30", "--k", "2", "--mode", "brute"}).code == 2);
    CHECK(run_cli({"search", "--m-min", "3", "--m-max", "5", "--k", "2", "--mode", "fast"}).code == 2);
    CHECK(run_cli({"search", "--m-min", "3", "--m-max", "5", "--k", "2", "--mode", "det", "--shards", "2",
                   "--shard-index", "2"})
              .code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"witness", "--m", "5", "--bogus"}).code == 2);
    CHECK(run_cli({"witness"}).code == 2);
    CHECK(run_cli({"verify", "--pair", "/nonexistent/pair.json"}).code == 2);
}

TEST_CASE("construct output round-trips through verify and gfcheck") {
    for (std::string family : {"theorem11", "remark12", "theoremC", "dombi"}) {
        const auto path = temp_path(family + ".json");
        const auto c = run_cli({"construct", "--family", family, "--l", "2", "--out", path});
        REQUIRE(c.code == 0);

        const auto v = run_cli({"verify", "--pair", path});
        CHECK(v.code == 0);
        CHECK(v.json()["equal"] == true);
        CHECK(v.json()["first_divergence"].is_null());
        CHECK(v.json()["profile_C"]["kind"] == "SAME");

        const auto g = run_cli({"gfcheck", "--pair", path});
        CHECK(g.code == 0);
        CHECK(g.json()["ok"] == true);
        CHECK(g.json()["pair_identities"].is_null() == (family == "theoremC" || family == "dombi"));

        std::ifstream in(path);
        const auto file = Json::parse(in);
        CHECK(file.size() == 3);
        CHECK(file["m"] == c.json()["m"]);
        std::filesystem::remove(path);
    }
}

TEST_CASE("verify and gfcheck report failures with exit 1") {
    const auto path = temp_path("broken.json");
    std::ofstream(path) << R"({"m":13,"C":[0,3,4,6,7,8,10,13],"D":[1,2,5,6,7,9,11,12]})";
    const auto v = run_cli({"verify", "--pair", path});
    CHECK(v.code == 1);
    CHECK(v.json()["equal"] == false);
    const auto g = run_cli({"gfcheck", "--pair", path});
    CHECK(g.code == 1);
    CHECK(g.json()["pair_identities"]["complement"]["holds"] == true);
    CHECK(g.json()["pair_identities"]["pair_identity"]["holds"] == false);

    std::ofstream(path) << R"({"m":13,"C":[0,3,6,7,8,10,13],"D":[1,2,4,6,7,9,11,12]})";
    CHECK(run_cli({"verify", "--pair", path}).code == 2);
    std::ofstream(path) << R"({"m":13,"C":[0,3,5,6,7,8,10,13],"D":[1,2,4,6,7,9,11,12],"intersection":[6]})";
    CHECK(run_cli({"verify", "--pair", path}).code == 2);
    std::ofstream(path) << R"({"m":13,"C":[3,0,5,6,7,8,10,13],"D":[1,2,4,6,7,9,11,12]})";
    CHECK(run_cli({"verify", "--pair", path}).code == 2);
    std::filesystem::remove(path);
}

TEST_CASE("stdout is byte-identical across runs") {
    const std::vector<std::vector<std::string>> cmds = {
        {"construct", "--family", "remark12", "--l", "2"},
        {"solve", "--m", "14", "--intersection", "6,7", "--trace"},
        {"search", "--m-min", "1", "--m-max", "12", "--k", "1", "--mode", "brute", "--shards", "4"},
        {"lemmas", "--which", "3", "--max", "5000"},
        {"witness", "--m", "100"},
    };
    for (const auto& cmd : cmds) {
        const auto a = run_cli(cmd), b = run_cli(cmd);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}
