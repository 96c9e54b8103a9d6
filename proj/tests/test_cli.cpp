#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "sylvester/cli.hpp"

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    args.insert(args.begin(), "sylvester");
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code =
        sylvester::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("poly subcommand") {
    {
        const CliResult r = run({"poly", "bernoulli", "--k", "2"});
        CHECK(r.exit_code == 0);
        CHECK(r.out == "x^2 - x + 1/6\n");
    }
    {
        const CliResult r = run({"poly", "vector-bernoulli", "--n", "0,0", "--matrix", "1,2;1,0"});
        CHECK(r.exit_code == 0);
        CHECK(r.out == "1\n");
    }
    {
        const CliResult r = run({"poly", "eulerian", "--k", "1", "--rho", "1"});
        CHECK(r.exit_code != 0);
        CHECK(r.err.find("rho must not equal 1") != std::string::npos);
    }
    {
        const CliResult r = run({"poly", "higher-bernoulli", "--k", "1", "--d", "1,1"});
        CHECK(r.exit_code == 0);
        CHECK(r.out == "x - 1\n");
    }
    {
        const CliResult r = run({"--json", "poly", "bernoulli", "--k", "1"});
        CHECK(r.exit_code == 0);
        const auto parsed = nlohmann::json::parse(r.out);
        CHECK(parsed["vars"] == 1);
        CHECK(parsed["terms"].size() == 2);
        CHECK(parsed["terms"][0]["coeff"]["re"] == "-1/2");
    }
    {
        const CliResult r = run({"poly", "no-such-family", "--k", "1"});
        CHECK(r.exit_code != 0);
    }
    {
        // A wider series cap changes nothing.
        const CliResult base = run({"poly", "vector-bernoulli", "--n", "1,0", "--matrix",
                                    "1,2,0;1,0,1"});
        const CliResult capped = run({"poly", "vector-bernoulli", "--n", "1,0", "--matrix",
                                      "1,2,0;1,0,1", "--cap", "5"});
        CHECK(base.exit_code == 0);
        CHECK(base.out == capped.out);
    }
}

TEST_CASE("scalar subcommand") {
    {
        const CliResult r = run({"scalar", "--parts", "1,2,3", "--s", "6"});
        CHECK(r.exit_code == 0);
        CHECK(r.out == "7\n");
    }
    {
        const CliResult r = run({"scalar", "--parts", "1,2,3", "--verify", "--max-s", "100"});
        CHECK(r.exit_code == 0);
        CHECK(r.out == "OK 101/101\n");
    }
    {
        const CliResult r = run({"scalar", "--parts", "0,2"});
        CHECK(r.exit_code != 0);
        CHECK(r.err.find("positive") != std::string::npos);
    }
    {
        const CliResult r = run({"scalar", "--parts", "1,2", "--s", "-1"});
        CHECK(r.exit_code != 0);
    }
    {
        const CliResult r = run({"scalar", "--parts", "1,2"});
        CHECK(r.exit_code == 0);
        const auto parsed = nlohmann::json::parse(r.out);
        REQUIRE(parsed.contains("terms"));
        CHECK(parsed["terms"].size() >= 2);
        CHECK(parsed["terms"][0].contains("j"));
        CHECK(parsed["terms"][0].contains("shift"));
        CHECK(parsed["terms"][0].contains("poly"));
    }
}

TEST_CASE("vector subcommand") {
    {
        const CliResult r = run({"vector", "--matrix", "1,2,0;1,0,1", "--s", "3,5", "--alpha",
                                 "1,0", "--limit", "--verify"});
        CHECK(r.exit_code == 0);
        const auto parsed = nlohmann::json::parse(r.out);
        CHECK(parsed["value"]["re"] == "2");
        CHECK(parsed["value"]["im"] == "0");
        CHECK(parsed["brute"] == 2);
    }
    {
        const CliResult r =
            run({"vector", "--matrix", "1,2;1,0", "--s", "5,2", "--alpha", "0,1", "--limit"});
        CHECK(r.exit_code == 0);
        const auto parsed = nlohmann::json::parse(r.out);
        CHECK(parsed["value"]["re"] == "0");
        CHECK(parsed["brute"].is_null());
    }
    {
        const CliResult r = run({"vector", "--matrix", "1,1;2,2"});
        CHECK(r.exit_code != 0);
        CHECK(r.err.find("matrix rank 1 < rows 2") != std::string::npos);
    }
    {
        const CliResult r = run({"vector", "--matrix", "1,2,1,0;1,1,0,1", "--s", "3,2",
                                 "--alpha", "1,-1+1i", "--verify"});
        CHECK(r.exit_code == 0);
        const auto parsed = nlohmann::json::parse(r.out);
        CHECK(parsed["value"]["re"] == "5");
        CHECK(parsed["brute"] == 5);
        CHECK(parsed["alpha"][1]["re"] == "-1");
        CHECK(parsed["alpha"][1]["im"] == "1");
    }
    {
        // Degenerate alpha without --limit is a distinct error.
        const CliResult r =
            run({"vector", "--matrix", "1,2,0;1,0,1", "--s", "1,1", "--alpha", "1,0"});
        CHECK(r.exit_code != 0);
        CHECK(r.err.find("zero set") != std::string::npos);
    }
    {
        const CliResult r = run({"vector", "--matrix", "1,2,0;1,0,1"});
        CHECK(r.exit_code == 0);
        const auto parsed = nlohmann::json::parse(r.out);
        CHECK(parsed["l"] == 2);
        CHECK(parsed["m"] == 3);
        CHECK(parsed["matrix"][0] == std::vector<int>{1, 2, 0});
        CHECK(parsed["waves"].size() >= 4);
    }
    {
        // Grid verification on a one-row system (single global chamber).
        const CliResult r =
            run({"--verify", "--grid", "30", "vector", "--matrix", "1,2", "--alpha", "1"});
        CHECK(r.exit_code == 0);
        CHECK(r.out == "OK 31/31\n");
    }
    {
        const CliResult r = run({"--verify", "vector", "--matrix", "1,2"});
        CHECK(r.exit_code != 0);
        CHECK(r.err.find("requires --alpha") != std::string::npos);
    }
    {
        // A custom perturbation direction gives the same chamber limit.
        const CliResult with_dir =
            run({"vector", "--matrix", "1,2,0;1,0,1", "--s", "3,5", "--alpha", "1,0", "--limit",
                 "--limit-dir", "1,2"});
        CHECK(with_dir.exit_code == 0);
        const auto parsed = nlohmann::json::parse(with_dir.out);
        CHECK(parsed["value"]["re"] == "2");
    }
}

TEST_CASE("output is byte-deterministic") {
    const std::vector<std::vector<std::string>> invocations{
        {"vector", "--matrix", "1,2,1,0;1,1,0,1"},
        {"scalar", "--parts", "6,10,15"},
        {"--json", "poly", "higher-eulerian", "--k", "3", "--d", "1,2", "--rho", "-1"},
    };
    for (const auto& args : invocations) {
        const CliResult a = run(args);
        const CliResult b = run(args);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}

TEST_CASE("usage errors exit nonzero") {
    CHECK(run({}).exit_code != 0);
    CHECK(run({"scalar"}).exit_code != 0);
    CHECK(run({"vector", "--matrix", "1,2;1,0", "--s", "1,1"}).exit_code != 0);  // missing alpha
    CHECK(run({"poly", "bernoulli"}).exit_code != 0);                            // missing --k
}
