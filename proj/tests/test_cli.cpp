#include "doctest.h"

#include "enriques/cli.hpp"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    CliRun r;
    r.code = enriques::run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

nlohmann::json parse(const std::string& text)
{
    return nlohmann::json::parse(text);
}

} // namespace

TEST_CASE("phi on a bracketed class")
{
    const CliRun r = run({"phi", "--class", "[2,1,0,0,0,0,0,0,0,0]"});
    REQUIRE(r.code == 0);
    const auto j = parse(r.out);
    CHECK(j["square"] == 4);
    CHECK(j["phi"] == 1);
    CHECK(j["class"] == nlohmann::json({2, 1, 0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(!j["witnesses"].empty());
}

TEST_CASE("phi on a symbolic class")
{
    const CliRun r = run({"phi", "--class", "2*E9+2*E10+2*E910"});
    REQUIRE(r.code == 0);
    const auto j = parse(r.out);
    CHECK(j["square"] == 40);
    CHECK(j["phi"] == 6);
}

TEST_CASE("oracle cross-checks are recorded in the output")
{
    const CliRun before = run({"--oracle", "phi", "--class", "E1+E2"});
    REQUIRE(before.code == 0);
    CHECK(parse(before.out)["oracle_checked"] == true);

    // Global flags fall through past the subcommand name.
    const CliRun after = run({"phi", "--class", "E1+E2", "--oracle"});
    REQUIRE(after.code == 0);
    CHECK(parse(after.out)["oracle_checked"] == true);
}

TEST_CASE("a class outside the positive cone is a domain error")
{
    const CliRun r = run({"phi", "--class", "[0,0,0,0,0,0,0,0,0,0]"});
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    const auto j = parse(r.err);
    CHECK(j["error"]["code"] == "non_positive_square");
}

TEST_CASE("malformed classes and bad usage exit with status 2")
{
    const CliRun bad_class = run({"phi", "--class", "[1,2"});
    CHECK(bad_class.code == 2);
    CHECK(parse(bad_class.err)["error"]["code"] == "parse_class");

    const CliRun bad_symbol = run({"phi", "--class", "2*E8"});
    CHECK(bad_symbol.code == 2);
    CHECK(parse(bad_symbol.err)["error"]["code"] == "parse_class");

    const CliRun unknown = run({"frobnicate"});
    CHECK(unknown.code == 2);
    CHECK(parse(unknown.err)["error"]["code"] == "usage");

    const CliRun missing = run({"phi"});
    CHECK(missing.code == 2);

    const CliRun both = run({"--json", "--table", "census", "--square", "4"});
    CHECK(both.code == 2);

    const CliRun threads = run({"--threads", "0", "phi", "--class", "E1"});
    CHECK(threads.code == 2);
}

TEST_CASE("census of square 4 lists both components")
{
    const CliRun r = run({"census", "--square", "4"});
    REQUIRE(r.code == 0);
    const auto j = parse(r.out);
    CHECK(j["square"] == 4);
    CHECK(j["genus"] == 3);
    REQUIRE(j["components"].size() == 2);
    CHECK(j["components"][0]["a"] ==
          nlohmann::json({0, 0, 0, 0, 0, 0, 0, 1, 0, 1}));
    CHECK(j["components"][1]["a"] ==
          nlohmann::json({2, 1, 0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(j["components"][0]["epsilon"] == 0);
    CHECK(j["components"][1]["epsilon"] == 0);

    const CliRun table =
        run({"--table", "census", "--square", "4", "--oracle"});
    REQUIRE(table.code == 0);
    CHECK(table.out.rfind("square", 0) == 0);
    CHECK(table.out.find("(2,1,0,0,0,0,0,0,0,0)") != std::string::npos);
}

TEST_CASE("census oracle check is reflected in JSON output")
{
    const CliRun r = run({"--oracle", "census", "--square", "6"});
    REQUIRE(r.code == 0);
    CHECK(parse(r.out)["oracle_checked"] == true);
}

TEST_CASE("seshadri respects the model option, environment and config file")
{
    const CliRun vg = run({"seshadri", "--class", "E1+E2+E3"});
    REQUIRE(vg.code == 0);
    auto j = parse(vg.out);
    CHECK(j["model"] == "very_general");
    CHECK(j["exact"] == true);
    CHECK(j["epsilon"] == "2");
    CHECK(j["caveats"].empty());

    const CliRun gen =
        run({"--model", "general", "seshadri", "--class", "E1+E2+E3"});
    REQUIRE(gen.code == 0);
    j = parse(gen.out);
    CHECK(j["model"] == "general");
    CHECK(j["exact"] == false);
    CHECK(j["epsilon_lower"] == "1");
    CHECK(j["epsilon_upper"] == "2");
    CHECK(j["caveats"][0]["code"] == "interval_only");

    ::setenv("ENRIQUES_MODEL", "arbitrary", 1);
    const CliRun env = run({"seshadri", "--class", "E1+E2+E3"});
    ::unsetenv("ENRIQUES_MODEL");
    REQUIRE(env.code == 0);
    j = parse(env.out);
    CHECK(j["model"] == "arbitrary");
    CHECK(j["caveats"].size() == 2);

    const std::string config_path = "cli_test_config.ini";
    {
        std::ofstream f(config_path);
        f << "model=general\n";
    }
    const CliRun from_config =
        run({"--config", config_path, "seshadri", "--class", "E1+E2+E3"});
    REQUIRE(from_config.code == 0);
    CHECK(parse(from_config.out)["model"] == "general");

    // Command-line values win over the config file.
    const CliRun override_config =
        run({"--config", config_path, "--model", "very_general", "seshadri",
             "--class", "E1+E2+E3"});
    REQUIRE(override_config.code == 0);
    CHECK(parse(override_config.out)["model"] == "very_general");
    std::remove(config_path.c_str());

    const CliRun bogus =
        run({"--model", "bogus", "seshadri", "--class", "E1+E2+E3"});
    CHECK(bogus.code == 1);
    CHECK(parse(bogus.err)["error"]["code"] == "bad_parameter");
}

TEST_CASE("length subcommand and the configurable cap")
{
    const CliRun r = run({"length", "--class", "[2,1,0,0,0,0,0,0,0,0]"});
    REQUIRE(r.code == 0);
    const auto j = parse(r.out);
    CHECK(j["length"] == 3);
    CHECK(j["greedy_lower_bound"] <= 3);

    const CliRun capped = run(
        {"--length-cap", "2", "length", "--class", "[2,1,0,0,0,0,0,0,0,0]"});
    CHECK(capped.code == 1);
    CHECK(parse(capped.err)["error"]["code"] == "length_cap_exceeded");
}

TEST_CASE("classify reports the exceptional type")
{
    const CliRun r = run({"classify", "--class", "[0,0,0,0,0,0,0,2,2,2]"});
    REQUIRE(r.code == 0);
    const auto j = parse(r.out);
    CHECK(j["type"]["tag"] == "type_ii");
    CHECK(j["type"]["m"] == 7);
}

TEST_CASE("isotropic-enum returns the slice with its certificate")
{
    const CliRun r = run({"isotropic-enum", "--class", "E1+E2+E3", "--c", "2",
                          "--effective", "--oracle"});
    REQUIRE(r.code == 0);
    const auto j = parse(r.out);
    CHECK(!j["solutions"].empty());
    CHECK(j["certificate"]["radius"] == "2/3");
    CHECK(j["oracle_checked"] == true);
}

TEST_CASE("limit pair and the Cartier guard")
{
    const CliRun ok = run({"limit", "pair", "--r1", "0,1", "--p1",
                           "1,-1,0,0,0,0,0,0,0,0", "--r2", "0,1", "--p2",
                           "1,0,-1,0,0,0,0,0,0,0"});
    REQUIRE(ok.code == 0);
    CHECK(parse(ok.out)["pair"] == 1);

    const CliRun bad = run({"limit", "parity", "--r", "0,1", "--p",
                            "1,0,0,0,0,0,0,0,0,0"});
    CHECK(bad.code == 1);
    CHECK(parse(bad.err)["error"]["code"] == "not_cartier");
}

TEST_CASE("limit obstruct replays the multiplicity chain")
{
    const CliRun r = run({"limit", "obstruct", "--r", "0,6", "--p",
                          "8,-2,-2,-2,-2,-2,-2,0,0,0"});
    REQUIRE(r.code == 0);
    const auto j = parse(r.out);
    CHECK(j["verdict"] == "impossible");
    CHECK(j["m"] == 7);
    CHECK(j["normalizing_twist"] == 0);
    REQUIRE(j["steps"].size() == 5);
    for (const auto& s : j["steps"])
        CHECK(s["ok"] == true);
}

TEST_CASE("limit quotient prints the Enriques-shaped invariants")
{
    const CliRun r = run({"--k", "2", "limit", "quotient"});
    REQUIRE(r.code == 0);
    const auto j = parse(r.out);
    CHECK(j["rank"] == 10);
    CHECK(j["determinant"] == -1);
    CHECK(j["even"] == true);
    CHECK(j["signature"]["positive"] == 1);
    CHECK(j["signature"]["negative"] == 9);
    CHECK(j["xi_orthogonal"] == true);
}

TEST_CASE("verify replays the no-gap argument")
{
    const CliRun r = run({"verify", "--class", "2*E1+E2"});
    REQUIRE(r.code == 0);
    const auto j = parse(r.out);
    CHECK(j["verdict"] == "impossible");
    CHECK(j["epsilon"] == "1");
    REQUIRE(j.contains("limit_chain"));
    CHECK(j["limit_chain"]["steps"].size() == 5);
    for (const auto& s : j["steps"])
        CHECK(s["ok"] == true);

    const CliRun wrong_model =
        run({"--model", "general", "verify", "--class", "2*E1+E2"});
    CHECK(wrong_model.code == 1);
    CHECK(parse(wrong_model.err)["error"]["code"] == "unsupported_model");
}

TEST_CASE("help text lists the subcommands")
{
    const CliRun top = run({"--help"});
    CHECK(top.code == 0);
    for (const char* name :
         {"phi", "seshadri", "length", "fundrep", "census", "classify",
          "admissible", "isotropic-enum", "limit", "verify", "selftest"})
        CHECK(top.out.find(name) != std::string::npos);

    const CliRun sub = run({"phi", "--help"});
    CHECK(sub.code == 0);
    CHECK(sub.out.find("--class") != std::string::npos);
}

TEST_CASE("fundrep witness output")
{
    const CliRun r = run({"fundrep", "--class", "[2,1,0,0,0,0,0,0,0,0]",
                          "--randomized", "--seed", "42"});
    REQUIRE(r.code == 0);
    const auto j = parse(r.out);
    CHECK(j["coefficients"]["a"] ==
          nlohmann::json({2, 1, 0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(j["coefficients"]["epsilon"] == 0);
    CHECK(j["gram_ok"] == true);
    CHECK(j["reconstruction_ok"] == true);
    CHECK(j["sequence"].size() == 10);
}

TEST_CASE("table rendering is plain text")
{
    const CliRun r =
        run({"--table", "phi", "--class", "[2,1,0,0,0,0,0,0,0,0]"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("phi: 1") != std::string::npos);
    CHECK(r.out.find('{') == std::string::npos);
}

TEST_CASE("output is deterministic across runs")
{
    const std::vector<std::string> args{"census", "--square", "8"};
    const CliRun first = run(args);
    const CliRun second = run(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);

    const std::vector<std::string> fr{"fundrep", "--class",
                                      "[0,0,0,0,0,0,0,2,2,2]"};
    CHECK(run(fr).out == run(fr).out);
}
