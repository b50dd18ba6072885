#include <doctest.h>

#include "gf/groupoid.hpp"
#include "gf/io.hpp"
#include "gf/spectrum.hpp"
#include "oracles.hpp"

using gf::arrow_id;
using gf::element_id;
using gf::undefined;

namespace {
  // Cyclic group Z_n as a one-unit groupoid.
  gf::FiniteGroupoid cyclic(std::size_t n) {
    std::vector<std::string> labels;
    std::vector<arrow_id>    source(n, 0), range(n, 0), compose(n * n), inverse(n);
    for (std::size_t a = 0; a < n; ++a) {
      labels.push_back("c" + std::to_string(a));
      inverse[a] = (n - a) % n;
      for (std::size_t b = 0; b < n; ++b) {
        compose[a * n + b] = (a + b) % n;
      }
    }
    return {labels, source, range, compose, inverse};
  }

  // Z_2 x Z_2 as a one-unit groupoid.
  gf::FiniteGroupoid klein() {
    std::vector<arrow_id> compose(16);
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = 0; b < 4; ++b) {
        compose[a * 4 + b] = a ^ b;
      }
    }
    return {{"1", "a", "b", "ab"}, {0, 0, 0, 0}, {0, 0, 0, 0}, compose, {0, 1, 2, 3}};
  }

  // Pair groupoid on two objects: units 0, 1 and arrows 2: 0 -> 1, 3: 1 -> 0.
  gf::FiniteGroupoid pair_groupoid() {
    std::vector<arrow_id> compose(16, undefined);
    auto set = [&](arrow_id a, arrow_id b, arrow_id ab) { compose[a * 4 + b] = ab; };
    set(0, 0, 0), set(1, 1, 1), set(2, 0, 2), set(1, 2, 2), set(3, 1, 3), set(0, 3, 3);
    set(2, 3, 1), set(3, 2, 0);
    return {{"x", "y", "x->y", "y->x"}, {0, 1, 0, 1}, {0, 1, 1, 0}, compose, {0, 1, 3, 2}};
  }
}  // namespace

TEST_CASE("groupoid constructor rejects malformed data") {
  CHECK_THROWS_AS(gf::FiniteGroupoid({"a"}, {0}, {0}, {}, {0}), gf::GroupoidAxiomError);
  CHECK_THROWS_AS(gf::FiniteGroupoid({"a"}, {3}, {0}, {0}, {0}), gf::GroupoidAxiomError);
  // Non-associative "group" table on three arrows.
  std::vector<arrow_id> bad{0, 1, 2, 1, 0, 0, 2, 0, 0};
  CHECK_THROWS_AS(gf::FiniteGroupoid({"1", "a", "b"}, {0, 0, 0}, {0, 0, 0}, bad, {0, 1, 2}),
                  gf::GroupoidAxiomError);
  // Composable pair left undefined.
  auto c = std::vector<arrow_id>{0, 1, 1, undefined};
  CHECK_THROWS_AS(gf::FiniteGroupoid({"1", "g"}, {0, 0}, {0, 0}, c, {0, 1}),
                  gf::GroupoidAxiomError);
  CHECK_NOTHROW(pair_groupoid());
}

TEST_CASE("G_u(B2) has five arrows and three units, one of them fixed") {
  auto const S = oracle::semigroup("b2");
  auto const U = gf::universal_groupoid(S);
  CHECK(U.groupoid.size() == 5);
  CHECK(U.groupoid.units().size() == 3);
  auto const fixed = gf::fixed_units(U.groupoid);
  REQUIRE(fixed.size() == 1);
  CHECK(fixed.front() == U.unit_of[*S.zero()]);
  CHECK(gf::g_fix(U.groupoid).groupoid.size() == 1);
  CHECK(gf::orbits(U.groupoid).size() == 2);
}

TEST_CASE("property: germs satisfy the groupoid structure maps") {
  for (auto const& i : oracle::finite_corpus()) {
    auto const& S = *i.semigroup;
    CAPTURE(i.name);
    auto const U = gf::universal_groupoid(S);
    auto const& G = U.groupoid;
    CHECK(G.size() == S.size());
    for (arrow_id a = 0; a < G.size(); ++a) {
      auto const [s, e] = U.germs[a];
      CHECK(S.product(s, e) == s);
      CHECK(G.source(a) == U.unit_of[e]);
      CHECK(G.range(a) == U.unit_of[S.product({s, e, S.inverse(s)})]);
      CHECK(G.inverse(a) == U.arrow_of(S.inverse(s), S.product({s, e, S.inverse(s)})));
    }
    for (element_id s = 0; s < S.size(); ++s) {
      for (element_id e : S.idempotents()) {
        if (gf::natural_order_leq(S, e, S.domain_idempotent(s))) {
          for (element_id t = 0; t < S.size(); ++t) {
            if (gf::natural_order_leq(S, e, S.domain_idempotent(t))) {
              bool const same = U.arrow_of(s, e) == U.arrow_of(t, e);
              CHECK(same == gf::germs_equal(S, {s, e}, {t, e}));
            }
          }
        }
      }
    }
    CHECK(gf::are_isomorphic(G, gf::underlying_groupoid(S)));
  }
}

TEST_CASE("Z4 and Z2 x Z2 are told apart by exponent") {
  auto const r = gf::are_isomorphic(cyclic(4), klein());
  CHECK_FALSE(r);
  CHECK(r.refutation.find("exponent") != std::string::npos);
  CHECK(gf::group_exponent(cyclic(4)) == 4);
  CHECK(gf::group_exponent(klein()) == 2);
}

TEST_CASE("isomorphism certificate replays") {
  auto const G = cyclic(6);
  auto const H = gf::coproduct({cyclic(2), cyclic(3)});
  CHECK(H.units().size() == 2);
  CHECK_FALSE(gf::are_isomorphic(G, H));
  auto const r = gf::are_isomorphic(gf::coproduct({pair_groupoid(), cyclic(3)}),
                                    gf::coproduct({cyclic(3), pair_groupoid()}));
  REQUIRE(r);
  CHECK(gf::verify_isomorphism(gf::coproduct({pair_groupoid(), cyclic(3)}),
                               gf::coproduct({cyclic(3), pair_groupoid()}), *r.certificate));
  auto broken = *r.certificate;
  std::swap(broken[0], broken[1]);
  CHECK_FALSE(gf::verify_isomorphism(gf::coproduct({pair_groupoid(), cyclic(3)}),
                                     gf::coproduct({cyclic(3), pair_groupoid()}), broken));
}

TEST_CASE("tiny budget raises SearchBudgetExceeded") {
  auto const S = oracle::semigroup("s3");
  auto const G = gf::underlying_groupoid(S);
  CHECK_THROWS_AS(gf::are_isomorphic(G, G, 1), gf::SearchBudgetExceeded);
}

TEST_CASE("S3 commutator bundle is A3 and abelianization is Z2") {
  auto const S  = oracle::semigroup("s3");
  auto const G  = gf::universal_groupoid(S).groupoid;
  auto const C  = gf::commutator_bundle(G);
  CHECK(C.members.size() == 3);
  CHECK(gf::is_normal_subgroupoid(G, C));
  auto const ab = gf::abelianize(G);
  CHECK(ab.size() == 2);
  CHECK(gf::is_abelian_bundle(ab));
  CHECK(gf::are_isomorphic(ab, cyclic(2)));
}

TEST_CASE("quotient by a normal subgroupoid and the kernel of its projection") {
  auto const G = cyclic(4);
  auto const H = gf::generated_subgroupoid(G, {2});
  CHECK(H.members == std::vector<arrow_id>{0, 2});
  auto const Q = gf::quotient_groupoid(G, H);
  CHECK(Q.groupoid.size() == 2);
  CHECK(gf::is_groupoid_hom(G, Q.groupoid, Q.projection));
  CHECK(gf::kernel_of_hom(G, Q.groupoid, Q.projection) == H);
}

TEST_CASE("quotient rejects a subgroupoid that is not normal") {
  auto const S = oracle::semigroup("s3");
  auto const G = gf::universal_groupoid(S).groupoid;
  // A subgroup of order 2 in S3.
  arrow_id t = undefined;
  for (arrow_id a = 0; a < G.size(); ++a) {
    if (!G.is_unit(a) && G.compose(a, a) == G.source(a)) {
      t = a;
      break;
    }
  }
  REQUIRE(t != undefined);
  auto const H = gf::generated_subgroupoid(G, {t});
  CHECK_FALSE(gf::is_normal_subgroupoid(G, H));
  CHECK_THROWS_AS(gf::quotient_groupoid(G, H), gf::Error);
}

TEST_CASE("restrict needs an invariant unit set") {
  auto const G = pair_groupoid();
  CHECK_FALSE(gf::is_invariant_set(G, {0}));
  CHECK_THROWS_AS(gf::restrict(G, {0}), gf::NotInvariantSet);
  CHECK(gf::restrict(G, {0, 1}).groupoid.size() == 4);
  CHECK(gf::fixed_units(G).empty());
  CHECK_FALSE(gf::is_group_bundle(G));
  CHECK(gf::iso_bundle(G).members == std::vector<arrow_id>{0, 1});
}

TEST_CASE("subgroupoid rejects a selection not closed under composition") {
  auto const G = cyclic(4);
  CHECK_FALSE(gf::is_subgroupoid(G, gf::make_selection({0, 1})));
  CHECK_THROWS_AS(gf::subgroupoid(G, gf::make_selection({0, 1})), gf::NotASubgroupoid);
}

TEST_CASE("isotropy groups of G_u(I2)") {
  auto const S = oracle::semigroup("i2");
  auto const U = gf::universal_groupoid(S);
  std::vector<std::size_t> orders;
  for (arrow_id x : U.groupoid.units()) {
    orders.push_back(gf::isotropy_group(U.groupoid, x).groupoid.size());
  }
  std::sort(orders.begin(), orders.end());
  // Characters of E(I2) have bases 0, {1}, {2}, id; only id sees the swap.
  CHECK(orders == std::vector<std::size_t>{1, 1, 1, 2});
}

TEST_CASE("GF_BUDGET sets the default search budget") {
  setenv("GF_BUDGET", "1234", 1);
  CHECK(gf::search_budget_from_env() == 1234);
  setenv("GF_BUDGET", "junk", 1);
  CHECK_THROWS_AS(gf::search_budget_from_env(), gf::Error);
  unsetenv("GF_BUDGET");
  CHECK(gf::search_budget_from_env() == gf::default_search_budget);
}

TEST_CASE("groupoid JSON round trip") {
  for (auto const& i : oracle::finite_corpus()) {
    auto const G = gf::universal_groupoid(*i.semigroup).groupoid;
    auto const back = gf::groupoid_from_json(gf::json::parse(gf::groupoid_to_json(G).dump()));
    CAPTURE(i.name);
    CHECK(back.labels() == G.labels());
    CHECK(gf::verify_isomorphism(G, back, [&] {
      std::vector<arrow_id> id(G.size());
      for (arrow_id a = 0; a < G.size(); ++a) {
        id[a] = a;
      }
      return id;
    }()));
  }
}
