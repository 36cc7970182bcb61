#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "lzpath/campaign.hpp"
#include "lzpath/error.hpp"

using namespace lzp;
using fixtures::q;
using fixtures::w;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json smoke() { return builtin_config("a1-smoke"); }

Errc parse_error(const json& j) {
  try {
    CampaignConfig::parse(j);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("config accepted");
  return Errc::NotFound;
}

}  // namespace

TEST_CASE("JSON round trips") {
  auto a2 = fixtures::a2();
  const Weight x = w({-1, 2, 0}, q(-3, 2));
  CHECK(weight_from_json(to_json(x), 3) == x);
  Path p = *f_op(a2, Path::straight(a2.fundamental_level_zero(1) + a2.fundamental_level_zero(2)), 1);
  CHECK(path_from_json(to_json(p), 3) == p);
  LSPath ls = from_path(p);
  CHECK(ls_from_json(to_json(ls), 3) == ls);
  CHECK(rational_from_json(json(4)) == 4);
  CHECK_THROWS_AS(rational_from_json(json(0.5)), Error);
  CHECK_THROWS_AS(weight_from_json(json{{"pairings", {"1"}}}, 3), Error);
  CHECK_THROWS_AS(path_from_json(json{{"segments", json::array()}}, 3), Error);
}

TEST_CASE("weight specifications") {
  auto a2 = fixtures::a2();
  CHECK(weight_spec_from_json(a2, json::parse(R"({"Lambda": [1, 0, 0]})")) == a2.fundamental(0));
  CHECK(weight_spec_from_json(a2, json::parse(R"({"varpi": {"2": 1}, "delta": "1/2"})")) ==
        a2.fundamental_level_zero(2) + q(1, 2) * a2.delta());
  CHECK_THROWS_AS(weight_spec_from_json(a2, json::parse(R"({"varpi": {"0": 1}})")), Error);
  CHECK_THROWS_AS(weight_spec_from_json(a2, json::parse(R"({"varpi": {"x": 1}})")), Error);
  CHECK_THROWS_AS(weight_spec_from_json(a2, json::parse(R"({"lambda": [1, 0, 0]})")), Error);
}

TEST_CASE("algebra summary") {
  auto s = algebra_summary(algebra_from_json(json::parse(R"({"cartan": [[2, -2], [-2, 2]]})")));
  CHECK(s["marks"] == json::array({1, 1}));
  CHECK(s["comarks"] == json::array({1, 1}));
  CHECK(s["fundamental_level_zero"]["1"]["pairings"] == json::array({"-1", "1"}));
  CHECK(s["gram"][0][1] == "-2");
  CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"cartan": [[2, -1], [-1, 2]]})")), Error);
  CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"cartan": [[2, -2], [-2, 2]], "special_vertex": 5})")), Error);
}

TEST_CASE("config validation") {
  CHECK(CampaignConfig::parse(smoke()).checks.size() == 3);
  auto bad = smoke();
  bad["checks"].push_back(json{{"check", "no_such_check"}});
  CHECK(parse_error(bad) == Errc::BadInput);
  bad = smoke();
  bad["checks"][0]["radius"] = 3;
  CHECK(parse_error(bad) == Errc::BadInput);
  bad = smoke();
  bad["caps"]["depth"] = 0;
  CHECK(parse_error(bad) == Errc::BadInput);
  bad = smoke();
  bad["caps"]["node_cap"] = -5;
  CHECK(parse_error(bad) == Errc::BadInput);
  bad = smoke();
  bad["caps"]["extra"] = 1;
  CHECK(parse_error(bad) == Errc::BadInput);
  bad = smoke();
  bad["checks"] = json::array();
  CHECK(parse_error(bad) == Errc::BadInput);
  bad = smoke();
  bad.erase("algebra");
  CHECK(parse_error(bad) == Errc::BadInput);
  bad = smoke();
  bad["algebra"]["cartan"] = json::parse("[[2,-1],[-1,2]]");
  CHECK(parse_error(bad) == Errc::NotAffine);
  bad = smoke();
  bad["inject_fault"] = "unknown";
  CHECK(parse_error(bad) == Errc::BadInput);
  CHECK_THROWS_AS(builtin_config("nope"), Error);
  CHECK(known_checks().size() == 8);
}

TEST_CASE("depth above the cap is a configuration error") {
  auto cfg = smoke();
  cfg["caps"]["depth"] = 4;
  auto parsed = CampaignConfig::parse(cfg);
  CHECK_THROWS_AS(run_campaign(parsed, {}), Error);
}

TEST_CASE("smoke campaign writes deterministic reports") {
  const auto base = std::filesystem::temp_directory_path() / "lzpath-campaign-test";
  std::filesystem::remove_all(base);
  auto cfg = CampaignConfig::parse(smoke());
  auto first = run_campaign(cfg, base / "a");
  auto second = run_campaign(cfg, base / "b");
  CHECK(first.exit_code == 0);
  CHECK(second.exit_code == 0);
  for (const char* f : {"00-norm_bound.json", "01-branching.json", "02-minuscule_decomposition.json", "summary.json"}) {
    CHECK(std::filesystem::exists(base / "a" / f));
    CHECK(slurp(base / "a" / f) == slurp(base / "b" / f));
  }
  CHECK(std::filesystem::exists(base / "a" / "timings.json"));
  CHECK(slurp(base / "a" / "00-norm_bound.json").find("seconds") == std::string::npos);
  std::filesystem::remove_all(base);
}

TEST_CASE("every check kind runs from a config") {
  auto cfg = json::parse(R"({
    "algebra": {"cartan": [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]},
    "caps": {"depth": 6},
    "checks": [
      {"check": "norm_bound", "i": 2},
      {"check": "branching", "i": 1, "S": [2]},
      {"check": "character_branching", "i": 2, "S": [1], "window": "1"},
      {"check": "minuscule_decomposition", "lambda": {"Lambda": [0, 1, 0]}, "i": 2, "depth": 3},
      {"check": "sigma_properties", "lambda": {"varpi": {"2": 1}}, "m": [2], "sample_size": 20, "depth": 3},
      {"check": "straightening", "lambda": {"varpi": {"1": 1}}, "words": ["f2 f1", ""], "random_words": 3},
      {"check": "tensor_rule", "left": {"varpi": {"1": 1}}, "right": {"varpi": {"2": 1}}, "depth": 2, "trials": 40},
      {"check": "ls_closure", "lambda": {"varpi": {"1": 2}}, "S": [1, 2]}
    ]
  })");
  auto result = run_campaign(CampaignConfig::parse(cfg), {});
  REQUIRE(result.reports.size() == 8);
  for (const auto& r : result.reports) CHECK(r.verdict == Verdict::Verified);
  CHECK(result.exit_code == 0);
  CHECK(result.reports[5].parameters["words"].size() == 5);
}

TEST_CASE("exit codes follow the worst verdict") {
  Report ok, inc, bad;
  inc.verdict = Verdict::Inconclusive;
  bad.verdict = Verdict::Counterexample;
  CHECK(exit_code_for({ok, ok}) == 0);
  CHECK(exit_code_for({ok, inc}) == 3);
  CHECK(exit_code_for({inc, bad, ok}) == 2);
}

TEST_CASE("fault injection through a config") {
  auto cfg = smoke();
  cfg["inject_fault"] = "scaled-lowering";
  auto result = run_campaign(CampaignConfig::parse(cfg), {});
  CHECK(result.exit_code == 2);
  const AffineData a1 = algebra_from_json(cfg["algebra"]);
  bool replayed = false;
  for (const auto& r : result.reports)
    for (const auto& c : r.certificates)
      if (auto verdict = replay_certificate(a1, c)) {
        CHECK(*verdict);
        replayed = true;
      }
  CHECK(replayed);
}
