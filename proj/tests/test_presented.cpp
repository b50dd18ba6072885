#include <doctest.h>

#include <map>

#include "gf/presented.hpp"
#include "oracles.hpp"

using gf::FcisElement;
using gf::MunnTree;
using gf::Word;

namespace {
  Word w(std::string const& text) {
    return gf::parse_word(text, "xyz");
  }
}  // namespace

TEST_CASE("word parsing and formatting") {
  CHECK(w("xy'x") == Word{1, -2, 1});
  CHECK(w("x y* z") == Word{1, -2, 3});
  CHECK(gf::format_word(Word{1, -2}, "xyz") == "xy'");
  CHECK(gf::format_word(Word{}, "xyz") == "1");
  CHECK_THROWS_AS(w("xq"), gf::ParseError);
  CHECK_THROWS_AS(w("'x"), gf::ParseError);
}

TEST_CASE("free reduction and inversion") {
  CHECK(gf::free_reduce(w("xyy'x'z")) == w("z"));
  CHECK(gf::invert_word(w("xy'")) == w("yx'"));
  CHECK(gf::content(w("xz'")) == 0b101U);
}

TEST_CASE("Munn trees") {
  auto const x = MunnTree::from_word(w("x"));
  CHECK(x.edge_count() == 1);
  CHECK(x.end() == w("x"));
  auto const e = MunnTree::from_word(w("xx'"));
  CHECK(e.is_idempotent());
  CHECK(e.edge_count() == 1);
  auto const f = MunnTree::from_word(w("yy'"));
  CHECK(e * f == f * e);
  CHECK(x * x.inverse() * x == x);
  CHECK(MunnTree::from_word(w("xx'x")) == x);
  CHECK(MunnTree::from_word(w("x'xyy'")).edge_letters() == 0b11U);
}

TEST_CASE("property: Munn trees form an inverse semigroup on short words") {
  auto const words = gf::all_words(2, 3);
  for (std::size_t i = 0; i < words.size(); i += 7) {
    auto const s = MunnTree::from_word(words[i]);
    CHECK(s * s.inverse() * s == s);
    for (std::size_t j = 0; j < words.size(); j += 11) {
      auto const t = MunnTree::from_word(words[j]);
      Word       st = words[i];
      st.insert(st.end(), words[j].begin(), words[j].end());
      CHECK(MunnTree::from_word(st) == s * t);
    }
  }
}

TEST_CASE("FCIS normal forms") {
  auto const a = FcisElement::from_word(w("xx'y"));
  CHECK(a.support() == 0b11U);
  CHECK(a.word() == w("y"));
  CHECK(FcisElement::from_word(w("xy")) * FcisElement::from_word(w("y'")) == FcisElement(0b11U, w("x")));
  CHECK(FcisElement::idempotent(0b1U).is_idempotent());
  CHECK_THROWS_AS(FcisElement(0, Word{}), gf::EmptySupport);
  CHECK_THROWS_AS(FcisElement(0b1U, w("xx'")), gf::Error);
  CHECK_THROWS_AS(FcisElement(0b1U, w("y")), gf::Error);
  CHECK(gf::munn_to_fcis(MunnTree::from_word(w("xx'y"))) == a);
}

TEST_CASE("FCIS characters and quotients") {
  CHECK(gf::fcis_characters(3).size() == 7);
  auto const s = FcisElement::from_word(w("xy"));
  CHECK(gf::fcis_evaluate_char(0b11U, s) == 1);
  CHECK(gf::fcis_evaluate_char(0b01U, s) == 0);
  CHECK_THROWS_AS(gf::fcis_evaluate_char(0, s), gf::EmptySupport);
  CHECK(gf::fcis_quotient_by_char(0b111U, s) == w("xy"));
  CHECK_FALSE(gf::fcis_quotient_by_char(0b001U, s));
  // Inside A the quotient forgets the support and keeps the word.
  CHECK(gf::fcis_nu_related(0b11U, FcisElement::from_word(w("x")), FcisElement::from_word(w("xyy'")), 2));
  CHECK_FALSE(gf::fcis_nu_related(0b11U, FcisElement::from_word(w("x")), FcisElement::from_word(w("y")), 2));
  CHECK(gf::fcis_nu_related(0b01U, FcisElement::from_word(w("y")), FcisElement::from_word(w("xx'y")), 2));
}

TEST_CASE("all_words enumerates in breadth-first order") {
  auto const words = gf::all_words(2, 2);
  CHECK(words.size() == 4 + 16);
  CHECK(words.front() == Word{1});
  CHECK(words.back().size() == 2);
}

TEST_CASE("oracle check rejects non-Clifford targets") {
  std::vector<gf::FiniteInverseSemigroup> targets{oracle::semigroup("b2")};
  CHECK_THROWS_AS(gf::fcis_oracle_check(w("x"), w("x"), targets, 1), gf::NotClifford);
}

TEST_CASE("property: equal FCIS normal forms agree in every small Clifford target") {
  std::vector<gf::FiniteInverseSemigroup> targets;
  for (auto const& i : oracle::finite_corpus()) {
    if (i.semigroup->size() <= 4 && gf::is_clifford(*i.semigroup)) {
      targets.push_back(*i.semigroup);
    }
  }
  REQUIRE_FALSE(targets.empty());
  CHECK_FALSE(gf::fcis_oracle_sweep(2, 4, targets));
  // Distinct normal forms are separated somewhere.
  CHECK_FALSE(gf::fcis_oracle_check(w("x"), w("xyy'"), targets, 2));
  CHECK_FALSE(gf::fcis_oracle_check(w("xy"), w("yx'"), targets, 2));
  CHECK(gf::fcis_oracle_check(w("xy"), w("yx"), targets, 2));
}

TEST_CASE("Cuntz multiplication") {
  using gf::CuntzElement;
  auto const s1 = CuntzElement::generator(1), s2 = CuntzElement::generator(2);
  CHECK(gf::cuntz_multiply(s1.inverse(), s2).zero);
  CHECK(gf::cuntz_multiply(s1.inverse(), s1) == CuntzElement::unit());
  auto const p = gf::cuntz_multiply(s1, s1.inverse());
  CHECK(gf::cuntz_multiply(p, p) == p);
  CHECK(gf::cuntz_multiply(CuntzElement::make_zero(), s1).zero);
  CHECK(gf::format_cuntz(CuntzElement::make_zero()) == "0");
}

TEST_CASE("Cuntz homomorphisms to {0,1}") {
  CHECK(gf::cuntz_homs_to_two(2) == 1);
  CHECK(gf::cuntz_homs_to_two(3) == 1);
  // For n = 1 the map sending s1 and s1* to 1 is also multiplicative.
  CHECK(gf::cuntz_homs_to_two(1) == 2);
  CHECK_THROWS_AS(gf::cuntz_homs_to_two(0), gf::Error);
}

TEST_CASE("property: Cuntz ball is closed under inverse and associative") {
  auto const ball = gf::cuntz_ball(2, 3);
  for (auto const& a : ball) {
    CHECK(gf::cuntz_multiply(gf::cuntz_multiply(a, a.inverse()), a) == a);
    for (auto const& b : ball) {
      for (auto const& c : {ball[1], ball.back()}) {
        CHECK(gf::cuntz_multiply(gf::cuntz_multiply(a, b), c)
              == gf::cuntz_multiply(a, gf::cuntz_multiply(b, c)));
      }
    }
  }
}
