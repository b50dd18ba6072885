#include <doctest.h>

#include "gf/io.hpp"
#include "gf/verify.hpp"
#include "oracles.hpp"

TEST_CASE("main theorem on B2 with the diagonal congruence") {
  auto const i = oracle::load("b2");
  for (auto const& nu : gf::standard_congruences(i)) {
    CAPTURE(nu.name);
    auto const r = gf::verify_main_theorem(*i.semigroup, i.name, nu, gf::default_search_budget);
    CHECK(r.verified());
    CHECK(r.certificate);
    CHECK_FALSE(r.checks.empty());
  }
}

TEST_CASE("a tiny budget yields budget-exceeded, not refuted") {
  auto const i  = oracle::load("s3");
  auto const nu = gf::standard_congruences(i).front();
  auto const r  = gf::verify_main_theorem(*i.semigroup, i.name, nu, 1);
  CHECK(r.verdict == gf::Verdict::budget_exceeded);
  CHECK(gf::to_string(r.verdict) == "budget-exceeded");
}

TEST_CASE("a non-congruence is refuted") {
  auto const i = oracle::load("s3");
  gf::NamedCongruence bogus{"bogus", gf::Congruence(std::vector<std::size_t>{0, 0, 1, 1, 2, 2})};
  auto const r = gf::verify_main_theorem(*i.semigroup, i.name, bogus, gf::default_search_budget);
  CHECK(r.verdict == gf::Verdict::refuted);
  CHECK_FALSE(r.refutation.empty());
}

TEST_CASE("clifford structure requires a Clifford semigroup") {
  CHECK_THROWS_AS(gf::verify_clifford_structure(oracle::semigroup("b2"), "b2", 1000),
                  gf::NotClifford);
  CHECK(gf::verify_clifford_structure(oracle::semigroup("z2_top"), "z2_top", 100000).verified());
}

TEST_CASE("structure groups of a Clifford semigroup") {
  auto const S = oracle::semigroup("zero_group_z2");
  for (auto base : gf::enumerate_characters(S)) {
    auto const g = gf::structure_group(S, gf::Character{base});
    CHECK_FALSE(g.members.empty());
  }
  // z2_top: the quotient at the top character is not a group with zero.
  auto const T = oracle::semigroup("z2_top");
  bool       seen_non_zero_group = false;
  for (auto base : gf::enumerate_characters(T)) {
    seen_non_zero_group = seen_non_zero_group || !gf::structure_group(T, gf::Character{base}).zero_group;
  }
  CHECK(seen_non_zero_group);
}

TEST_CASE("run_theorem skips theorems that do not apply") {
  gf::RunOptions options;
  CHECK(gf::run_theorem(oracle::load("b2"), "clifford-structure", options).empty());
  CHECK(gf::run_theorem(oracle::load("cuntz_2"), "main", options).empty());
  auto const cuntz = gf::run_theorem(oracle::load("cuntz_2"), "fixed-points", options);
  REQUIRE(cuntz.size() == 1);
  CHECK(cuntz.front().verified());
  CHECK_THROWS_AS(gf::run_theorem(oracle::load("b2"), "nonsense", options), gf::Error);
}

TEST_CASE("every theorem verifies on the whole corpus") {
  gf::RunOptions options;
  for (auto const& i : oracle::corpus()) {
    if (i.semigroup && i.semigroup->size() <= 6 && gf::is_clifford(*i.semigroup)) {
      options.fcis_targets.push_back(*i.semigroup);
    }
  }
  for (auto const& i : oracle::corpus()) {
    for (auto const& r : gf::run_theorem(i, "all", options)) {
      CAPTURE(r.theorem);
      CAPTURE(r.semigroup);
      CAPTURE(r.congruence);
      CAPTURE(r.refutation);
      CHECK(r.verified());
    }
  }
}

TEST_CASE("parse errors name the offending field") {
  auto const expect = [](std::string const& text, std::string const& field) {
    try {
      gf::parse_instance(gf::json::parse(text), "t");
      FAIL("no exception for " << text);
    } catch (gf::ParseError const& e) {
      CHECK(std::string(e.what()).find(field) != std::string::npos);
    }
  };
  expect(R"({"kind": "table"})", "'name'");
  expect(R"({"name": "a", "kind": "blob"})", "'kind'");
  expect(R"({"name": "a", "kind": "table", "elements": ["e"], "table": [[3]]})", "'table[0]'");
  expect(R"({"name": "a", "kind": "table", "elements": ["e"], "table": [[0], [0]]})", "'table'");
  expect(R"({"name": "a", "kind": "partial_bijections", "degree": 2, "generators": [[0, 5]]})",
         "generators[0]");
  expect(R"({"name": "a", "kind": "partial_bijections", "degree": 2, "generators": [[0, 0]]})",
         "generators[0]");
  expect(R"({"name": "a", "kind": "presented", "presented": "cuntz", "n": 0})", "'n'");
  expect(R"({"name": "a", "kind": "presented", "presented": "fcis", "alphabet": ""})", "'alphabet'");
  expect(R"({"name": "a", "kind": "table", "elements": ["e"], "table": [[0]],
             "congruences": {"c": [["e", "f"]]}})",
         "congruences.c");
}

TEST_CASE("invalid tables surface as ValidationError") {
  CHECK_THROWS_AS(gf::parse_instance(gf::json::parse(
                      R"({"name": "lz", "kind": "table", "elements": ["a", "b"], "table": [[0, 0], [1, 1]]})")),
                  gf::ValidationError);
  CHECK_THROWS_AS(gf::load_instance("/nonexistent/x.json"), gf::ParseError);
}

TEST_CASE("report serialisation uses snake_case keys") {
  auto const i = oracle::load("z2");
  auto const r = gf::verify_fixed_point_bound(*i.semigroup, i.name);
  auto const j = gf::report_to_json(r);
  for (char const* key : {"theorem", "semigroup", "verdict", "checks", "search_nodes", "wall_time_ms",
                          "certificate", "refutation"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["verdict"] == "verified");
  CHECK(gf::report_to_text(r).rfind("verified", 0) == 0);
}

TEST_CASE("semigroup JSON carries zero and one") {
  auto const j = gf::semigroup_to_json(oracle::semigroup("zero_group_z2"));
  CHECK(j["zero"] == "0");
  CHECK(j["one"] == "1");
  CHECK(j["table"].size() == 3);
}
