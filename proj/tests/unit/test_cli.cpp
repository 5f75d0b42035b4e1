#include <doctest.h>

#include "tid/cli.hpp"
#include "tid/io.hpp"

using namespace tid;
using tid::cli::run;

namespace {

const std::string kPow2P2 = R"({"n": 2, "components": ["x0^2", "x1^2", "x2^2"]})";
const std::string kPow2P3 = R"({"n": 3, "components": ["x0^2", "x1^2", "x2^2", "x3^2"]})";

std::string firstLine(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("documented outputs") {
    auto r = run({"check-invariance", "--map", kPow2P2, "--divisor", "x0"});
    CHECK(r.exitCode == 0);
    CHECK(firstLine(r.text) == "Invariant, lambda=1");

    r = run({"bound", "--n", "4", "--sing-dim", "0"});
    CHECK(r.exitCode == 0);
    CHECK(firstLine(r.text) == "n=4 l=0 k=3 binom=4 maxDegree=2");

    r = run({"bound", "--n", "4", "--sing-dim", "0", "--quadric-exclusion"});
    CHECK(r.exitCode == 0);
    CHECK(r.text.find("maxDegree=1") != std::string::npos);
    CHECK(r.text.find("hyperplane") != std::string::npos);

    r = run({"nk", "--k", "2"});
    CHECK(firstLine(r.text) == "n_2 = 9 (exact)");

    r = run({"identity", "--max-n", "25"});
    CHECK(r.exitCode == 0);
    CHECK(firstLine(r.text) == "P(n,k,i) verified for all n<=25: 2925 cases");

    r = run({"twist", "--n", "3", "--d", "3", "--k", "2"});
    CHECK(firstLine(r.text) == "c_2(Omega(log X)(m)) = 3*m^2 - 2*m + 3");

    r = run({"obstruction", "--n", "3", "--d", "3", "--sing-dim", "0"});
    CHECK(firstLine(r.text) == "gap(m) = -m^3 - 2*m^2 + 3*m");
    CHECK(r.text.find("first negative gap at m=2") != std::string::npos);
  }

  TEST_CASE("table payload") {
    const auto r = run({"--json", "table", "--max-l", "6"});
    REQUIRE(r.json);
    std::vector<int> thresholds;
    for (const auto& row : *r.json) thresholds.push_back(row.at("threshold").get<int>());
    CHECK(thresholds == std::vector<int>{4, 4, 6, 10, 14, 19, 23, 27});
    CHECK(r.json->front().at("l") == -1);
  }

  TEST_CASE("exit codes") {
    CHECK(run({"check-invariance", "--map", kPow2P2, "--divisor", "x0 + x1"}).exitCode == 1);
    CHECK(run({"ramification", "--n", "2", "--d", "3", "--m", "2"}).exitCode == 0);
    CHECK(run({"ramification", "--n", "2", "--d", "4", "--m", "2"}).exitCode == 1);
    CHECK(run({"ff-check", "--map", kPow2P2, "--divisor", "x0*x1"}).exitCode == 0);
    CHECK(run({"ff-check", "--map", kPow2P2, "--divisor", "x0 + x1"}).exitCode == 1);
    CHECK(run({"cone-reduce", "--map", kPow2P3, "--base", "x0*x1", "--base-n", "1"}).exitCode == 0);
    CHECK(run({"cone-reduce", "--map", kPow2P3, "--base", "x0 + x1", "--base-n", "1"}).exitCode == 1);

    CHECK(run({}).exitCode == 2);
    CHECK(run({"frobnicate"}).exitCode == 2);
    CHECK(run({"nk"}).exitCode == 2);
    CHECK(run({"nk", "--k", "two"}).exitCode == 2);
    CHECK(run({"check-invariance", "--map", kPow2P2, "--divisor", "x0 x1"}).exitCode == 2);
    CHECK(run({"check-invariance", "--map", "/nonexistent/map.json", "--divisor", "x0"}).exitCode == 2);
    CHECK(run({"check-invariance", "--map", R"({"n": 1, "components": ["x0^2", "x1^3"]})", "--divisor", "x0"})
              .exitCode == 2);
    CHECK(run({"--primes", "3,4", "ff-check", "--map", kPow2P2, "--divisor", "x0"}).exitCode == 2);
    CHECK(run({"twist", "--n", "3", "--d", "3", "--k", "5"}).exitCode == 2);
    CHECK(run({"--help"}).exitCode == 0);
  }

  TEST_CASE("json payload present iff requested") {
    const std::vector<std::vector<std::string>> commands = {
        {"check-invariance", "--map", kPow2P2, "--divisor", "x0"},
        {"ramification", "--n", "3", "--d", "2", "--m", "2"},
        {"chern", "--n", "3", "--d", "2"},
        {"twist", "--n", "3", "--d", "3", "--k", "2", "--m", "4"},
        {"identity", "--n", "5", "--k", "3", "--i", "2"},
        {"obstruction", "--n", "3", "--d", "3", "--sing-dim", "0"},
        {"bound", "--n", "6", "--sing-dim", "1"},
        {"table", "--max-l", "2"},
        {"nk", "--k", "1"},
        {"corollary", "--n", "6", "--codegree", "2"},
        {"classify-isolated", "--n", "5"},
        {"cone-reduce", "--map", kPow2P3, "--base", "x0*x1", "--base-n", "1"},
        {"ff-check", "--map", kPow2P2, "--divisor", "x0*x1*x2"},
    };
    for (const auto& cmd : commands) {
      CAPTURE(cmd.front());
      const auto plain = run(cmd);
      CHECK(plain.exitCode == 0);
      CHECK_FALSE(plain.json);
      auto withFlag = cmd;
      withFlag.insert(withFlag.begin(), "--json");
      const auto structured = run(withFlag);
      CHECK(structured.exitCode == 0);
      CHECK(structured.json);
    }
  }

  TEST_CASE("json payloads re-parse into module types") {
    auto r = run({"--json", "check-invariance", "--map", kPow2P2, "--divisor", "x1*x2"});
    REQUIRE(r.json);
    const auto report = r.json->at("report").get<InvarianceReport>();
    CHECK(report.invariant());
    CHECK(*report.lambda == 1);
    CHECK(mapFromJson(r.json->at("map")).q() == 2);
    CHECK(divisorFromJson(r.json->at("divisor")).degree() == 2);

    r = run({"--json", "bound", "--n", "4", "--sing-dim", "0", "--quadric-exclusion"});
    const auto bound = r.json->get<BoundReport>();
    CHECK(bound.maxDegree == 1);
    CHECK(bound.binomial == 4);
    CHECK(bound.exclusions == std::vector<std::string>{"quadric"});

    r = run({"--json", "nk", "--k", "2"});
    const auto nk = r.json->get<NkValue>();
    CHECK(nk.isExact);
    CHECK(nk.exactValue == 9);

    r = run({"--json", "chern", "--n", "3", "--d", "2"});
    CHECK(r.json->at("closed").get<ChernVector>() == r.json->at("series").get<ChernVector>());

    r = run({"--json", "twist", "--n", "3", "--d", "3", "--k", "2"});
    const auto twist = r.json->at("polynomial").get<TwistPolynomial>();
    CHECK(twist.coeffs == std::vector<BigInt>{3, -2, 3});

    r = run({"--json", "obstruction", "--n", "3", "--d", "3", "--sing-dim", "0"});
    CHECK(r.json->at("gap").get<GapPolynomial>().coeffs == std::vector<BigInt>{0, 3, -2, -1});
    CHECK(r.json->at("minimalM") == 2);

    r = run({"--json", "corollary", "--n", "5", "--codegree", "1"});
    CHECK(r.json->get<CorollaryReport>().admissible == std::vector<int>{2, 3});

    r = run({"--json", "classify-isolated", "--n", "7"});
    CHECK(r.json->get<IsolatedVerdict>().hyperplane);

    r = run({"--json", "identity", "--n", "5", "--k", "3", "--i", "2"});
    const auto id = r.json->at("check").get<IdentityCheck>();
    CHECK(id.lhs == 3);
    CHECK(id.holds);

    r = run({"--json", "cone-reduce", "--map", kPow2P3, "--base", "x0*x1", "--base-n", "1"});
    const auto& steps = r.json->at("steps");
    REQUIRE(steps.size() == 2);
    for (const auto& step : steps) {
      const auto red = reductionFromJson(step);
      CHECK(red.report.invariant());
      CHECK(*red.report.lambda == 1);
      CHECK(red.g.q() == 2);
    }
    CHECK(reductionFromJson(steps.back()).g.n() == 1);
  }

  TEST_CASE("identical inputs give byte-identical output") {
    const std::vector<std::string> cmd = {"--json", "--seed", "7", "cone-reduce", "--map",
                                          R"({"n": 3, "components": ["x1^2", "x0^2", "x2^2 + x0*x1", "x3^2"]})",
                                          "--base", "x0*x1", "--base-n", "1"};
    const auto a = run(cmd);
    const auto b = run(cmd);
    CHECK(a.exitCode == b.exitCode);
    CHECK(a.text == b.text);
    REQUIRE(a.json);
    CHECK(a.json->dump() == b.json->dump());

    const auto t1 = run({"table", "--max-l", "6"});
    const auto t2 = run({"table", "--max-l", "6"});
    CHECK(t1.text == t2.text);
  }
}
