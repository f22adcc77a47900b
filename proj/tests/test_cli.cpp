#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "helix/cli.hpp"
#include "helix/errors.hpp"
#include "helix/helix_ops.hpp"
#include "helix/io.hpp"
#include "test_support.hpp"

using namespace helix;
using helix::testing::Gen;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string seed_arg(const Seed& s) { return seed_to_json(s).dump(); }

Seed seed(long r_m1, long r_0, long d_m1, long d_0) {
  return Seed(make_int(r_m1), make_int(r_0), make_int(d_m1), make_int(d_0));
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("theta grammar") {
  auto q = [](const char* a, const char* b, long n) {
    return Theta(canonicalize(QuadNum(parse_rat(a), parse_rat(b), make_int(n))));
  };
  CHECK(parse_theta("1/2 - 1/2*sqrt(21)") == q("1/2", "-1/2", 21));
  CHECK(parse_theta("  1/2-1/2 * sqrt( 21 ) ") == q("1/2", "-1/2", 21));
  CHECK(parse_theta("-sqrt(6)") == q("0", "-1", 6));
  CHECK(parse_theta("-1/4*sqrt(96)") == q("0", "-1", 6));
  CHECK(parse_theta("-1/2*sqrt(21) + 1/2") == q("1/2", "-1/2", 21));
  CHECK(parse_theta("+3") == q("3", "0", 0));
  CHECK(parse_theta("23/10 - 1/30*sqrt(21)") == q("23/10", "-1/30", 21));
  CHECK(parse_theta("-inf").is_neg_infinity());
  CHECK_THROWS_AS(parse_theta(""), InputError);
  CHECK_THROWS_AS(parse_theta("1/2 -"), InputError);
  CHECK_THROWS_AS(parse_theta("1/0"), InputError);
  CHECK_THROWS_AS(parse_theta("1 + 2 + sqrt(5)"), InputError);
  CHECK_THROWS_AS(parse_theta("sqrt(2) + sqrt(3)"), InputError);
  CHECK_THROWS_AS(parse_theta("1/2 sqrt(5)"), InputError);
  CHECK_THROWS_AS(parse_theta("abc"), InputError);
}

TEST_CASE("JSON round trips") {
  Gen gen;
  for (int trial = 0; trial < 50; ++trial) {
    Seed s = gen.extendable_seed(3, 12, 20, true);
    REQUIRE(seed_from_json(json::parse(seed_to_json(s).dump())) == s);
    Theta t = theta(s);
    REQUIRE(theta_from_json(json::parse(theta_to_json(t).dump())) == t);
    ClassReport r = classify_theta(seed_det(s), t);
    ClassReport back = report_from_json(json::parse(report_to_json(r).dump()));
    REQUIRE(report_to_json(back) == report_to_json(r));
    auto w = same_numerical_class(s, twist(shift(s, 1), make_int(2)), true);
    REQUIRE(witness_from_json(witness_to_json(w)) == w);
  }
  CHECK(theta_from_json(theta_to_json(Theta::neg_infinity())).is_neg_infinity());
  CHECK(witness_to_json(std::nullopt).is_null());

  Int huge("123456789012345678901234567890", 10);
  json j = int_to_json(huge);
  CHECK(j.is_string());
  CHECK(int_from_json(j) == huge);
  CHECK(int_to_json(make_int(-7)).is_number_integer());
  CHECK(rat_to_json(Rat(3)).get<std::string>() == "3/1");
  CHECK_THROWS_AS(seed_from_json(json::parse(R"({"r":[1],"deg":[0,1]})")), InputError);
  CHECK_THROWS_AS(seed_from_json(json::parse(R"({"r":[0,1],"deg":[0,1]})")), InputError);
}

TEST_CASE("validate command") {
  Run a = run({"validate", seed_arg(seed(2, 1, -3, 1))});
  CHECK(a.code == 0);
  CHECK(contains(a.out, "verdict: YesGeneric"));
  CHECK(contains(a.out, "d: 5\n"));
  CHECK(contains(a.out, "D: 5\n"));
  CHECK(contains(a.out, "theta: 1/2 - 1/2*sqrt(21)"));
  CHECK(contains(a.out, "normalized: ((2,1),(-3,1))"));

  Run b = run({"--json", "validate", seed_arg(seed(1, 1, 0, 2))});
  CHECK(b.code == 0);
  json jb = json::parse(b.out);
  CHECK(jb["verdict"] == "Yes2");
  CHECK(jb["theta"]["neg_infinity"] == true);

  Run c = run({"validate", seed_arg(seed(1, 2, 0, 1))});
  CHECK(c.code == 1);
  CHECK(contains(c.out, "verdict: No"));

  Run bad = run({"validate", "{\"r\": [1, 2], \"deg\": "});
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "malformed"));
  CHECK(run({"validate", "/nonexistent/seed.json"}).code == 2);
  CHECK(run({"validate", R"({"r":[0,1],"deg":[0,1]})"}).code == 2);
}

TEST_CASE("seed files are accepted") {
  auto path = std::filesystem::temp_directory_path() / "helix_cli_seed.json";
  {
    std::ofstream f(path);
    f << R"({"r": [3, 1], "deg": [-7, 1]})";
  }
  Run r = run({"theta", path.string()});
  std::filesystem::remove(path);
  CHECK(r.code == 0);
  CHECK(r.out == "-sqrt(6)\n");
}

TEST_CASE("classify command") {
  Run a = run({"--json", "classify", "10", "-sqrt(6)"});
  CHECK(a.code == 0);
  CHECK(json::parse(a.out)["count"] == 2);
  CHECK(json::parse(run({"--json", "classify", "5", "1/2 - 1/2*sqrt(21)"}).out)["count"] == 2);
  CHECK(json::parse(run({"--json", "classify", "5", "1/3 - 1/2*sqrt(21)"}).out)["count"] == 0);

  Run text = run({"classify", "5", "23/10 - 1/30*sqrt(21)"});
  CHECK(contains(text.out, "count: 2"));

  Run unparsable = run({"classify", "5", "1/2 - sqrt"});
  CHECK(unparsable.code == 2);
  Run radicand = run({"classify", "5", "1/2 - sqrt(5)"});
  CHECK(radicand.code == 2);
  CHECK(contains(radicand.err, "sqrt(21)"));
  Run positive = run({"classify", "5", "1/2 + 1/2*sqrt(21)"});
  CHECK(positive.code == 1);
  CHECK(contains(positive.err, "no helix"));
}

TEST_CASE("equiv command") {
  Run distinct = run({"equiv", seed_arg(seed(3, 1, -7, 1)), seed_arg(seed(7, 1, -17, -1))});
  CHECK(distinct.code == 1);
  CHECK(contains(distinct.out, "distinct"));

  const Seed s = seed(2, 1, -3, 1);
  Run same = run({"--json", "equiv", seed_arg(s), seed_arg(twist(shift(s, 1), make_int(2)))});
  CHECK(same.code == 0);
  json w = json::parse(same.out)["witness"];
  CHECK(w["shift"] == 1);
  CHECK(w["twist"] == 2);
  CHECK(w["dual"] == false);

  Run dual_run = run({"equiv", seed_arg(s), seed_arg(seed(3, 1, -5, 0)), "--allow-dual"});
  CHECK(dual_run.code == 0);
  CHECK(contains(dual_run.out, "equivalent up to dual"));
  CHECK(run({"equiv", seed_arg(s), seed_arg(seed(3, 1, -5, 0))}).code == 1);
}

TEST_CASE("corpus command") {
  Run all = run({"corpus"});
  CHECK(all.code == 0);
  auto pos = all.out.rfind('\n', all.out.size() - 2);
  std::string summary = all.out.substr(pos + 1);
  int passed = 0, failed = -1;
  REQUIRE(std::sscanf(summary.c_str(), "%d passed, %d failed", &passed, &failed) == 2);
  CHECK(passed >= 20);
  CHECK(failed == 0);

  Run injected = run({"corpus", "--inject-failure"});
  CHECK(injected.code == 1);
  CHECK(contains(injected.out, "FAIL injected/wrong-count"));
  CHECK(contains(injected.out, "citation: injected wrong expectation"));

  Run filtered = run({"--json", "corpus", "--filter", "caseyis3"});
  CHECK(filtered.code == 0);
  json cases = json::parse(filtered.out)["cases"];
  CHECK(cases.size() >= 3);
  for (const json& c : cases) CHECK(contains(c["id"].get<std::string>(), "caseyis3"));
}

TEST_CASE("sequence, theta, ample, hilbert and pell commands") {
  const std::string s = seed_arg(seed(2, 1, -3, 1));
  Run seq = run({"seq", s, "--from", "-1", "--to", "1"});
  CHECK(seq.out == "n,rank,degree\n-1,2,-3\n0,1,1\n1,3,8\n");

  Run th = run({"theta", s, "--approx", "6"});
  CHECK(th.out == "1/2 - 1/2*sqrt(21)  ~ -1.791287\n");

  Run ample = run({"--json", "ample", s});
  CHECK(ample.code == 0);
  json ja = json::parse(ample.out);
  CHECK(ja["ample"] == true);
  CHECK(ja["limit_product"]["b"] == "5/21");

  Run three = run({"ample", "--three-periodic", "4"});
  CHECK(three.code == 0);
  CHECK(contains(three.out, "ample: yes"));

  Run csv = run({"hilbert", "--seed", s, "--size", "3"});
  CHECK(csv.out == "0,5,25,120\n,0,5,25\n,,0,5\n,,,0\n");
  Run hj = run({"--json", "hilbert", "--seed", s, "--size", "2"});
  CHECK(json::parse(hj.out)["h"][0] == json::parse("[0,5,25]"));

  Run pell = run({"pell", "5", "2", "1"});
  json jp = json::parse(pell.out);
  CHECK(jp["diag"]["x"] == 3);
  CHECK(jp["diag"]["y"] == -1);
  CHECK(jp["pell"]["X"] == -84);
  CHECK(jp["pell"]["Y"] == 18);
  CHECK(run({"pell", "3", "4", "1"}).code == 1);
  CHECK(run({"pell", "x", "4", "1"}).code == 2);
}

TEST_CASE("usage errors and help") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(contains(help.out, "classify"));
}

TEST_CASE("output is deterministic") {
  const std::vector<std::vector<std::string>> commands{
      {"--json", "corpus"},
      {"--json", "classify", "5", "23/10 - 1/30*sqrt(21)"},
      {"validate", seed_arg(seed(4, 7, 9, 17)), "--approx", "30"},
  };
  for (const auto& c : commands) {
    Run first = run(c);
    Run second = run(c);
    CHECK(first.out == second.out);
    CHECK(first.code == second.code);
  }
}
