#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "bzt/cli.hpp"
#include "support/oracles.hpp"

using namespace bzt;
using cli::InputError;
using cli::JobSpec;
using json = nlohmann::ordered_json;

namespace {

struct Run {
    int exit_code;
    std::string out;
    std::string err;
};

Run run_args(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    auto spec = cli::parse_args(args, out);
    REQUIRE(spec.has_value());
    int code = cli::run(*spec, out, err);
    return Run{code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("minors command reproduces the first worked example") {
    Run r = run_args({"minors", "--p-roots", "-1,1,4", "--p-lead", "1", "--q-coeffs", "-6,11,-6,1"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[ -38, 48, -10 ]") != std::string::npos);
    CHECK(r.out.find("[ -24, 12, -2 ]") != std::string::npos);
    CHECK(r.out.find("trailing minors of B:     -2, -24, 0") != std::string::npos);
    CHECK(r.out.find("pattern: Degenerate") != std::string::npos);
}

TEST_CASE("interlace command on the second worked example") {
    Run r = run_args({"interlace", "--q-coeffs", "-15,23,-9,1", "--nodes", "2,4,6"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("verdict: RealDistinctInterlacing") != std::string::npos);
    CHECK(r.out.find("sturm confirmed: yes") != std::string::npos);
}

TEST_CASE("json output parses back to the exact library values") {
    Run r = run_args({"minors", "--p-roots", "2,4,6", "--p-lead", "1", "--q-coeffs", "-15,23,-9,1",
                      "--format", "json"});
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("command") == "minors");
    CHECK(j.at("pattern") == "AllPositive");

    RationalMatrix b = testsupport::example2_b();
    const json& jb = j.at("matrices").at("B");
    for (int i = 0; i < 3; ++i)
        for (int c = 0; c < 3; ++c)
            CHECK(parse_rational(jb.at(i).at(c).get<std::string>()) == b.at(i, c));

    MinorSequence minors = trailing_minors(b);
    const json& jm = j.at("minors");
    for (int s = 1; s <= 3; ++s) CHECK(parse_rational(jm.at(s - 1).get<std::string>()) == minors.at_size(s));
    for (const json& c : j.at("checks")) CHECK(c.at("equal").get<bool>());
}

TEST_CASE("byte-identical output for identical specs") {
    std::vector<std::string> args{"verify", "--family", "multiple-roots", "--n", "5",
                                  "--count", "50", "--seed", "7", "--format", "json"};
    Run first = run_args(args);
    Run second = run_args(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    json j = json::parse(first.out);
    CHECK(j.at("failures") == 0);
    CHECK(j.at("instances").size() == 50);
    CHECK(j.at("seed") == 7);
}

TEST_CASE("seeds select different instance streams deterministically") {
    Run a = run_args({"verify", "--family", "distinct-roots", "--n", "4", "--count", "3", "--seed", "1"});
    Run b = run_args({"verify", "--family", "distinct-roots", "--n", "4", "--count", "3", "--seed", "2"});
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(a.out.find("failures: 0") != std::string::npos);
}

TEST_CASE("malformed rationals are reported with the offending field") {
    std::ostringstream sink;
    CHECK_THROWS_WITH(cli::parse_args({"minors", "--p-roots", "-1,x,4", "--q-coeffs", "1"}, sink),
                      Catch::Matchers::ContainsSubstring("--p-roots[1]") &&
                          Catch::Matchers::ContainsSubstring("malformed rational"));
    CHECK_THROWS_AS(cli::parse_args({"minors", "--p-coeffs", "1,2", "--p-roots", "3", "--q-coeffs", "1"}, sink),
                    InputError);
    CHECK_THROWS_AS(cli::parse_args({"bogus"}, sink), InputError);
    CHECK_THROWS_AS(cli::parse_args({}, sink), InputError);
}

TEST_CASE("degree violations exit with code 1 and a diagnostic") {
    std::ostringstream out, err;
    auto spec = cli::parse_args({"bezout", "--p-coeffs", "1,1", "--q-coeffs", "1,0,0,1"}, out);
    REQUIRE(spec.has_value());
    CHECK(cli::run(*spec, out, err) == 1);
    CHECK(err.str().find("degree order violated") != std::string::npos);
}

TEST_CASE("repeated nodes in any order are fine for the polynomial engine") {
    std::ostringstream out, err;
    auto spec = cli::parse_args({"delta", "--q-coeffs", "0,0,1", "--nodes", "1,2,1"}, out);
    REQUIRE(spec.has_value());
    CHECK(cli::run(*spec, out, err) == 0);
}

TEST_CASE("verify rejects unknown families") {
    std::ostringstream out, err;
    auto spec = cli::parse_args({"verify", "--family", "nonsense"}, out);
    REQUIRE(spec.has_value());
    CHECK(cli::run(*spec, out, err) == 1);
    CHECK(err.str().find("family") != std::string::npos);
}

TEST_CASE("job specs load from a JSON input file") {
    std::string path = "cli_test_job.json";
    {
        std::ofstream f(path);
        f << R"({"command":"interlace","Q":{"coeffs":["-15","23","-9","1"]},"nodes":["2","4","6"],)"
          << R"("options":{"format":"json","width":"1/1024"}})";
    }
    std::ostringstream out, err;
    auto spec = cli::parse_args({"--input", path}, out);
    REQUIRE(spec.has_value());
    int code = cli::run(*spec, out, err);
    std::remove(path.c_str());
    CHECK(code == 0);
    json j = json::parse(out.str());
    CHECK(j.at("verdict") == "RealDistinctInterlacing");
    CHECK(j.at("sturm_confirmed") == true);
    CHECK(j.at("pattern") == "AllPositive");
    const json& iv = j.at("isolated_roots");
    REQUIRE(iv.size() == 2);
    Rational lo = parse_rational(iv.at(0).at(0).get<std::string>());
    Rational hi = parse_rational(iv.at(0).at(1).get<std::string>());
    CHECK(hi - lo < make_rational(1, 1024));
}

TEST_CASE("json input errors name their fields") {
    std::string path = "cli_test_bad.json";
    {
        std::ofstream f(path);
        f << R"({"command":"delta","Q":{"coeffs":["1","oops"]},"nodes":["1"]})";
    }
    std::ostringstream out;
    try {
        cli::parse_args({"--input", path}, out);
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("Q.coeffs[1]") != std::string::npos);
    }
    std::remove(path.c_str());
}

TEST_CASE("help prints the available subcommands") {
    std::ostringstream out;
    auto spec = cli::parse_args({"--help"}, out);
    CHECK_FALSE(spec.has_value());
    for (const char* name : {"bezout", "delta", "minors", "interp", "theorem1", "verify", "interlace",
                             "defect", "sturm"})
        CHECK(out.str().find(name) != std::string::npos);
}

TEST_CASE("remaining commands smoke-run") {
    CHECK(run_args({"bezout", "--p-roots", "-1,1,4", "--q-coeffs", "-6,11,-6,1"}).exit_code == 0);
    CHECK(run_args({"delta", "--q-coeffs", "-6,11,-6,1", "--nodes", "-1,1,4"}).exit_code == 0);
    Run interp = run_args({"interp", "--q-coeffs", "-15,23,-9,1", "--nodes", "2,4,6"});
    CHECK(interp.exit_code == 0);
    CHECK(interp.out.find("coefficients (ascending): 33, -21, 3") != std::string::npos);
    Run t1 = run_args({"theorem1", "--p-roots", "-1,1,4", "--q-coeffs", "-6,11,-6,1"});
    CHECK(t1.exit_code == 0);
    Run d = run_args({"defect", "--p-coeffs", "4,-1,-4,1", "--q-coeffs", "-6,11,-6,1", "--format", "json"});
    CHECK(d.exit_code == 0);
    json dj = json::parse(d.out);
    CHECK(dj.at("defect") == 1);
    CHECK(dj.at("gcd_degree") == 1);
    Run s = run_args({"sturm", "--p-coeffs", "-6,11,-6,1", "--width", "1/32"});
    CHECK(s.exit_code == 0);
    CHECK(s.out.find("distinct real roots: 3") != std::string::npos);
}

TEST_CASE("minors accepts coefficient-form P and skips the Delta side") {
    Run r = run_args({"minors", "--p-coeffs", "4,-1,-4,1", "--q-coeffs", "-6,11,-6,1", "--format", "json"});
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("matrices").contains("B"));
    CHECK_FALSE(j.at("matrices").contains("Delta"));
    CHECK_FALSE(j.contains("checks"));
    CHECK(parse_rational(j.at("minors").at(0).get<std::string>()) == -2);
}
