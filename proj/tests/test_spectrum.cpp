#include <doctest.h>

#include <set>

#include "gf/spectrum.hpp"
#include "oracles.hpp"

using gf::element_id;

namespace {
  std::vector<int> indicator(gf::FiniteInverseSemigroup const& S, element_id base) {
    std::vector<int> out(S.size(), 0);
    for (element_id e : S.idempotents()) {
      out[e] = gf::evaluate(S, gf::Character{base}, e);
    }
    return out;
  }
}  // namespace

TEST_CASE("B2 has three characters and one fixed character") {
  auto const S = oracle::semigroup("b2");
  CHECK(gf::enumerate_characters(S).size() == 3);
  auto const fixed = gf::fixed_characters(S);
  REQUIRE(fixed.size() == 1);
  CHECK(fixed.bases().front() == *S.zero());
  CHECK(gf::constant_one(S).base == *S.zero());
  CHECK(gf::homs_to_two(S).size() == 1);
}

TEST_CASE("property: characters agree with brute force on every corpus semigroup") {
  for (auto const& i : oracle::finite_corpus()) {
    auto const& S = *i.semigroup;
    CAPTURE(i.name);
    std::set<std::vector<int>> lib;
    for (element_id e : gf::enumerate_characters(S)) {
      lib.insert(indicator(S, e));
    }
    auto const brute = oracle::characters(S);
    CHECK(lib == std::set<std::vector<int>>(brute.begin(), brute.end()));
  }
}

TEST_CASE("evaluate rejects non-idempotents") {
  auto const S = oracle::semigroup("b2");
  CHECK_THROWS_AS(gf::evaluate(S, gf::Character{*S.zero()}, S.index_of("e12")), gf::NotIdempotent);
}

TEST_CASE("spectral action is defined exactly on the domain") {
  auto const S   = oracle::semigroup("b2");
  auto const e11 = S.index_of("e11"), e22 = S.index_of("e22");
  auto const e12 = S.index_of("e12");
  // e12* e12 = e22, so beta_{e12} acts on characters with xi(e22) = 1.
  CHECK(gf::spectral_action(S, e12, gf::Character{e22}).base == e11);
  CHECK_THROWS_AS(gf::spectral_action(S, e12, gf::Character{e11}), gf::OutsideDomain);
}

TEST_CASE("property: spectral action composes") {
  for (auto const& i : oracle::finite_corpus()) {
    auto const& S = *i.semigroup;
    CAPTURE(i.name);
    for (element_id base : gf::enumerate_characters(S)) {
      gf::Character const xi{base};
      for (element_id s = 0; s < S.size(); ++s) {
        if (gf::evaluate(S, xi, S.domain_idempotent(s)) != 1) {
          continue;
        }
        auto const ys = gf::spectral_action(S, s, xi);
        for (element_id t = 0; t < S.size(); ++t) {
          if (gf::evaluate(S, ys, S.domain_idempotent(t)) == 1) {
            CHECK(gf::spectral_action(S, t, ys) == gf::spectral_action(S, S.product(t, s), xi));
          }
        }
      }
    }
  }
}

TEST_CASE("multiply is the pointwise product") {
  auto const S   = oracle::semigroup("semilattice_2x2");
  auto const a   = S.index_of("01"), b = S.index_of("10");
  auto const ab  = gf::multiply(S, gf::Character{a}, gf::Character{b});
  REQUIRE(ab);
  CHECK(indicator(S, ab->base)
        == [&] {
             auto x = indicator(S, a), y = indicator(S, b);
             for (std::size_t k = 0; k < x.size(); ++k) {
               x[k] &= y[k];
             }
             return x;
           }());
  auto const B = oracle::semigroup("b2");
  CHECK_FALSE(gf::multiply(B, gf::Character{B.index_of("e11")}, gf::Character{B.index_of("e22")}));
}

TEST_CASE("character_with_support") {
  auto const S = oracle::semigroup("b2");
  std::vector<bool> up(S.size(), false);
  up[S.index_of("e11")] = true;
  CHECK(gf::character_with_support(S, up)->base == S.index_of("e11"));
  up[S.index_of("e22")] = true;
  CHECK_FALSE(gf::character_with_support(S, up));
  CHECK_FALSE(gf::character_with_support(S, std::vector<bool>(S.size(), false)));
}

TEST_CASE("rho_from_set and set_from_rho invert each other on every corpus semigroup") {
  for (auto const& i : oracle::finite_corpus()) {
    auto const& S = *i.semigroup;
    if (S.idempotents().size() > 8) {
      continue;
    }
    CAPTURE(i.name);
    for (auto const& rho : gf::normal_idempotent_congruences(S)) {
      auto const F = gf::set_from_rho(S, rho);
      CHECK(gf::classify_set(S, F) == gf::SetFlags{true, true, true});
      CHECK(gf::rho_from_set(S, F) == rho);
    }
    for (auto const& F : gf::unital_multiplicative_invariant_sets(S)) {
      CHECK(gf::set_from_rho(S, gf::rho_from_set(S, F)) == F);
    }
  }
}

TEST_CASE("rho_from_set rejects a set that is not invariant") {
  auto const S = oracle::semigroup("b2");
  gf::CharacterSet const F({S.index_of("e11")});
  CHECK_FALSE(gf::is_invariant(S, F));
  CHECK_FALSE(gf::classify_set(S, F).invariant);
  CHECK_THROWS_AS(gf::rho_from_set(S, F), gf::NotInvariant);
}

TEST_CASE("property: fixed characters extend to homomorphisms and back") {
  for (auto const& i : oracle::finite_corpus()) {
    auto const& S = *i.semigroup;
    CAPTURE(i.name);
    auto const fixed = oracle::fixed_characters(S);
    auto const homs  = oracle::homs_to_two(S);
    CHECK(gf::fixed_characters(S).size() == fixed.size());
    CHECK(gf::homs_to_two(S).size() == homs.size());
    for (element_id base : gf::fixed_characters(S)) {
      CHECK(gf::is_fixed(S, gf::Character{base}));
    }
  }
}

TEST_CASE("unital multiplicative invariant set enumeration honours its limit") {
  CHECK_THROWS_AS(gf::unital_multiplicative_invariant_sets(oracle::semigroup("i2"), 2),
                  gf::SearchBudgetExceeded);
}
