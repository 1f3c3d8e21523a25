#include "parhiggs/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using nlohmann::json;

namespace {

const std::string kData = PARHIGGS_TEST_DATA;

struct Run {
    int code;
    json doc;
    std::string err;
};

Run run(std::vector<std::string> argv) {
    std::ostringstream out, err;
    int code = parhiggs::cli::run(argv, out, err);
    return {code, json::parse(out.str()), err.str()};
}

std::string data(const std::string& f) { return kData + "/" + f; }

}  // namespace

TEST_CASE("exit codes follow the verdict") {
    auto t = run({"gw", "--k", "2", "--n", "4", "--classes", "[1],[1],[1],[1]", "--degree", "0"});
    CHECK(t.code == 0);
    CHECK(t.doc["verdict"] == true);
    CHECK(t.doc["exit"] == 0);
    CHECK(t.doc["result"]["value"] == 2);
    auto f = run({"rigidity", "--n", "2", "--dims", "2,2,2,2"});
    CHECK(f.code == 1);
    CHECK(f.doc["verdict"] == false);
    auto e = run({"pardeg", "--bundle", data("malformed.json")});
    CHECK(e.code == 2);
    CHECK(e.doc["error"]["input"] == "--bundle");
    CHECK_FALSE(e.err.empty());
    CHECK_FALSE(e.doc.contains("verdict"));
}

TEST_CASE("input errors") {
    CHECK(run({"frob"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"pardeg", "--bundle", data("does_not_exist.json")}).code == 2);
    CHECK(run({"gw", "--k", "2", "--n", "4", "--classes", "[1]", "--degree", "0"}).code == 2);
    CHECK(run({"construct", "--example", "6.9", "--eps", "1/10"}).code == 2);
    CHECK(run({"construct", "--example", "7.1"}).code == 2);
    CHECK(run({"bounds", "--theorem", "--main"}).code == 2);
    auto r = run({"rigidity", "--n", "2"});
    CHECK(r.code == 2);
    CHECK(r.doc["exit"] == 2);
}

TEST_CASE("report layout") {
    auto r = run({"pardeg", "--bundle", data("bundle_generic.json")});
    REQUIRE(r.code == 0);
    std::vector<std::string> keys;
    for (const auto& [k, v] : r.doc.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"command", "exit", "input_digest", "result", "schema", "subcommand", "verdict"});
    CHECK(r.doc["schema"] == 1);
    CHECK(r.doc["subcommand"] == "pardeg");
    CHECK(r.doc["input_digest"].get<std::string>().size() == 64);
    CHECK(r.doc["result"]["par_deg"] == "-1/18");
    CHECK_FALSE(r.doc.contains("wall_time_ms"));
    auto timed = run({"--timing", "pardeg", "--bundle", data("bundle_generic.json")});
    CHECK(timed.doc.contains("wall_time_ms"));
}

TEST_CASE("reports are deterministic") {
    std::vector<std::vector<std::string>> cmds{
        {"construct", "--example", "6.9", "--eps", "1/36"},
        {"construct", "--example", "6.2", "--n", "3", "--a", "1"},
        {"minimal-energy", "--model", data("example69_model.json")},
        {"ds-exists", "--classes", data("classes_su2.json")},
    };
    for (const auto& c : cmds) {
        std::ostringstream a, b, e;
        parhiggs::cli::run(c, a, e);
        parhiggs::cli::run(c, b, e);
        CHECK(a.str() == b.str());
    }
    auto x = run({"gw", "--k", "2", "--n", "4", "--classes", "[1],[1],[1],[1]", "--degree", "0"});
    auto y = run({"gw", "--k", "2", "--n", "4", "--classes", "[1],[1],[2],[0]", "--degree", "0"});
    CHECK(x.doc["input_digest"] != y.doc["input_digest"]);
}

TEST_CASE("subcommands on the example data") {
    auto s = run({"stability", "--bundle", data("bundle_generic.json")});
    CHECK(s.code == 0);
    CHECK(s.doc["result"]["subbundles"][0]["max_par_deg"] == "-1/24");
    auto m = run({"minimal-energy", "--model", data("example69_model.json")});
    CHECK(m.code == 0);
    auto g = run({"gw-cert", "--model", data("example69_model.json")});
    CHECK(g.code == 0);
    CHECK(g.doc["result"]["certificate"]["invariant"] == 1);
    auto d = run({"ds-exists", "--classes", data("classes_su2.json")});
    CHECK(d.code == 0);
    CHECK(run({"genericity", "--classes", data("classes_su2.json")}).code == 0);
    CHECK(run({"genericity", "--classes", data("classes_su2.json"), "--criterion", "subset-sum"}).code == 1);
    auto c62 = run({"construct", "--example", "6.2", "--n", "3", "--a", "1"});
    CHECK(c62.code == 0);
    CHECK(c62.doc["result"]["certificate"]["stability"]["stable"] == true);
    CHECK(c62.doc["result"]["genericity"]["selection"]["generic"] == true);
    auto c69 = run({"construct", "--example", "6.9", "--eps", "1/36"});
    CHECK(c69.code == 0);
    CHECK(run({"bounds", "--theorem", "--n", "3", "--r", "3"}).code <= 1);
}

TEST_CASE("batch manifests") {
    auto b = run({"batch", "--manifest", data("manifest.json")});
    CHECK(b.code == 2);
    REQUIRE(b.doc["results"].size() == 5);
    CHECK(b.doc["results"][0]["exit"] == 0);
    CHECK(b.doc["results"][1]["exit"] == 1);
    CHECK(b.doc["results"][3]["exit"] == 2);
    CHECK(b.doc["results"][4]["exit"] == 0);
    CHECK(b.doc["summary"]["total"] == 5);
    CHECK(b.doc["summary"]["error"] == 1);
    auto empty = run({"batch", "--manifest", data("manifest_empty.json")});
    CHECK(empty.code == 0);
    CHECK(empty.doc["summary"]["total"] == 0);
}
