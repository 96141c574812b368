#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "entail/cli.hpp"
#include "json.hpp"

using namespace entail;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("prove: exit code and text verdicts") {
    Run r = cli({"prove", "--logic", "c", "|- p | ~p"});
    CHECK(r.code == 0);
    CHECK(r.out.find("provable") != std::string::npos);

    r = cli({"prove", "--logic", "i", "|- p | ~p"});
    CHECK(r.code == 1);
    CHECK(r.out.find("unprovable") != std::string::npos);
    CHECK(r.out.find("countermodel") != std::string::npos);

    r = cli({"prove", "--logic", "m", "F |- q"});
    CHECK(r.code == 1);
    r = cli({"prove", "--logic", "i", "F |- q"});
    CHECK(r.code == 0);
}

TEST_CASE("prove: json output carries trace and countermodel") {
    Run r = cli({"prove", "--logic", "i", "--format", "json", "p & q |- q"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "provable");
    CHECK(j["trace"].is_array());
    CHECK(!j["trace"].empty());
    CHECK(j["countermodel"].is_null());

    r = cli({"prove", "--logic", "c", "--format", "json", "|- p & q"});
    CHECK(r.code == 1);
    j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "unprovable");
    CHECK(j["countermodel"].contains("assignment"));

    r = cli({"prove", "--logic", "i", "--format", "json", "|- p | ~p"});
    j = nlohmann::json::parse(r.out);
    CHECK(j["countermodel"].contains("worlds"));
}

TEST_CASE("prove: malformed input exits 2") {
    Run r = cli({"prove", "--logic", "i", "p |"});
    CHECK(r.code == 2);
    CHECK(!r.err.empty());
    r = cli({"prove", "--logic", "z", "|- p"});
    CHECK(r.code == 2);
}

TEST_CASE("translate golden outputs") {
    Run r = cli({"translate", "--nucleus", "df", "p -> q"});
    CHECK(r.code == 0);
    CHECK(r.out == "(p -> q) | F\n");

    r = cli({"translate", "--nucleus", "glivenko", "p"});
    CHECK(r.out == "~~p\n");

    r = cli({"translate", "--nucleus", "peirce", "p | q"});
    CHECK(r.out == "~(p | q) -> p | q\n");

    r = cli({"translate", "--nucleus", "deduction:r & s", "p"});
    CHECK(r.out == "r & s -> p\n");

    r = cli({"translate", "--nucleus", "bogus", "p"});
    CHECK(r.code == 2);
}

TEST_CASE("conserve: small runs succeed and are deterministic") {
    Run a = cli({"conserve", "--check", "glivenko", "--samples", "50", "--seed", "3",
                 "--format", "json"});
    CHECK(a.code == 0);
    Run b = cli({"conserve", "--check", "glivenko", "--samples", "50", "--seed", "3",
                 "--format", "json"});
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["failures"] == 0);
    CHECK(j["samples"] == 50);

    CHECK(cli({"conserve", "--check", "df", "--samples", "40", "--seed", "1"}).code == 0);
    CHECK(cli({"conserve", "--check", "deduction", "--samples", "40", "--seed", "1"}).code == 0);
    CHECK(cli({"conserve", "--check", "nope", "--samples", "5"}).code == 2);
}

TEST_CASE("campaign: abstract theorem runs") {
    Run a = cli({"campaign", "--trials", "60", "--seed", "9", "--format", "json"});
    CHECK(a.code == 0);
    Run b = cli({"campaign", "--trials", "60", "--seed", "9", "--format", "json"});
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out)["failures"] == 0);
}

TEST_CASE("CI_STRICT requires an explicit seed") {
    setenv("CI_STRICT", "1", 1);
    CHECK(cli({"campaign", "--trials", "5"}).code == 2);
    CHECK(cli({"conserve", "--check", "glivenko", "--samples", "5"}).code == 2);
    CHECK(cli({"campaign", "--trials", "5", "--seed", "4"}).code == 0);
    unsetenv("CI_STRICT");
    CHECK(cli({"campaign", "--trials", "5"}).code == 0);
}

TEST_CASE("abstract: nucleus check and conservation from a system file") {
    std::string path = "cli_test_system.json";
    {
        std::ofstream f(path);
        f << R"({"carrier": ["a", "b", "c", "d"],
                 "axioms": [{"from": ["a"], "to": "c"}, {"from": ["b"], "to": "c"}],
                 "rules": [{"premises": [{"from": ["a"], "to": "b"}],
                            "conclusion": {"from": [], "to": "d"}}],
                 "nucleus": {"a": "a", "b": "c", "c": "c", "d": "d"}})";
    }
    Run r = cli({"abstract", "--file", path, "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["is_nucleus"] == true);

    r = cli({"abstract", "--file", path, "--conservation", "--format", "json"});
    CHECK(r.code == 0);  // theorem holds even though weak != strong
    j = nlohmann::json::parse(r.out);
    CHECK(j["conservation"]["weak_subset_strong"] == true);
    CHECK(j["conservation"]["equal"] == false);
    CHECK(j["conservation"]["all_rules_compatible"] == false);
    CHECK(j["conservation"]["biconditional_ok"] == true);

    CHECK(cli({"abstract", "--file", "no_such_file.json"}).code == 2);
    std::remove(path.c_str());
}

TEST_CASE("usage errors exit 2") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"prove"}).code == 2);          // missing sequent
    CHECK(cli({"translate", "p"}).code == 2); // missing nucleus
}
