#pragma once

// Infinite inverse semigroups with finite normal forms: free inverse
// semigroups (Munn trees), free Clifford inverse semigroups, and the Cuntz
// inverse semigroup S_n.
//
// Words are sequences of signed letters: letter i of the alphabet is i + 1,
// its formal inverse is -(i + 1).

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gf/core.hpp"

namespace gf {

  using Letter    = int;
  using Word      = std::vector<Letter>;
  using LetterSet = std::uint32_t;  // bit i set iff letter i + 1 is present

  inline constexpr std::size_t max_alphabet = 26;

  //! Parses "x y' x" or "xy'x" (a prime or a star marks an inverse letter)
  //! over an alphabet of single characters. Throws ParseError.
  Word        parse_word(std::string const& text, std::string const& alphabet);
  std::string format_word(Word const& w, std::string const& alphabet);

  //! Iterated cancellation of adjacent inverse letters.
  Word      free_reduce(Word w);
  Word      invert_word(Word const& w);
  LetterSet content(Word const& w);

  ////////////////////////////////////////////////////////////////////////
  // Free inverse semigroup
  ////////////////////////////////////////////////////////////////////////

  //! A birooted word tree, translated so the start root is the empty word.
  //! Vertices are reduced words forming a prefix-closed set.
  class MunnTree {
   public:
    static MunnTree from_word(Word const& w);

    std::set<Word> const& vertices() const noexcept {
      return _vertices;
    }
    Word const& end() const noexcept {
      return _end;
    }
    std::size_t edge_count() const noexcept {
      return _vertices.size() - 1;
    }
    bool is_idempotent() const noexcept {
      return _end.empty();
    }
    //! Letters labelling some edge.
    LetterSet edge_letters() const;

    MunnTree operator*(MunnTree const& other) const;
    MunnTree inverse() const;

    auto operator<=>(MunnTree const&) const = default;

   private:
    std::set<Word> _vertices{Word{}};
    Word           _end;
  };

  ////////////////////////////////////////////////////////////////////////
  // Free Clifford inverse semigroup
  ////////////////////////////////////////////////////////////////////////

  //! Normal form (C, w): a nonempty support C and a reduced word over C.
  class FcisElement {
   public:
    //! Throws EmptySupport, or Error when w is unreduced or leaves C.
    FcisElement(LetterSet support, Word word);

    static FcisElement from_word(Word const& w);
    static FcisElement generator(Letter x);
    //! e_A.
    static FcisElement idempotent(LetterSet A);

    LetterSet support() const noexcept {
      return _support;
    }
    Word const& word() const noexcept {
      return _word;
    }
    bool is_idempotent() const noexcept {
      return _word.empty();
    }

    FcisElement operator*(FcisElement const& other) const;
    FcisElement inverse() const;

    auto operator<=>(FcisElement const&) const = default;

   private:
    LetterSet _support;
    Word      _word;
  };

  //! The Clifford quotient FIS(X) -> FCIS(X): (edge letters, end root).
  FcisElement munn_to_fcis(MunnTree const& t);

  //! The characters chi_A for nonempty A within an alphabet of size n,
  //! ordered by bitmask; 2^n - 1 of them.
  std::vector<LetterSet> fcis_characters(std::size_t n);

  //! chi_A(C, w) = 1 iff C is a subset of A. Throws EmptySupport.
  int fcis_evaluate_char(LetterSet A, FcisElement const& s);

  //! The image in F(A) u {0}: the reduced word when the support lies in A,
  //! nullopt (zero) otherwise. Throws EmptySupport.
  std::optional<Word> fcis_quotient_by_char(LetterSet A, FcisElement const& s);

  //! (s, t) in nu_{chi_A}, decided from the definition: chi_A agrees on
  //! s*s and t*t, and s e = t e for some idempotent e in the same rho class
  //! as s*s. The witness search runs over e_B for B within the alphabet of
  //! size n.
  bool fcis_nu_related(LetterSet A, FcisElement const& s, FcisElement const& t, std::size_t n);

  //! Evaluates a nonempty word in T under letter i + 1 -> assignment[i].
  element_id evaluate_word(FiniteInverseSemigroup const& T,
                           std::vector<element_id> const& assignment,
                           Word const&                    w);

  //! True iff w1 and w2 take the same value under every assignment of the
  //! alphabet (size n) in every target. Throws NotClifford for a target that
  //! is not Clifford.
  bool fcis_oracle_check(Word const&                                w1,
                         Word const&                                w2,
                         std::vector<FiniteInverseSemigroup> const& targets,
                         std::size_t                                n);

  //! Every nonempty word of length <= max_length over an alphabet of size n.
  std::vector<Word> all_words(std::size_t n, std::size_t max_length);

  struct OracleCounterexample {
    Word        first;
    Word        second;
    std::size_t target;
  };

  //! Exhaustive soundness sweep: groups all words of length <= max_length
  //! by FCIS normal form and returns two words with equal normal form that
  //! some target separates, if any.
  std::optional<OracleCounterexample>
  fcis_oracle_sweep(std::size_t                                n,
                    std::size_t                                max_length,
                    std::vector<FiniteInverseSemigroup> const& targets);

  ////////////////////////////////////////////////////////////////////////
  // Cuntz inverse semigroup
  ////////////////////////////////////////////////////////////////////////

  //! zero, or s_mu s_nu* with mu, nu words over 1..n (positive letters).
  struct CuntzElement {
    bool zero = false;
    Word mu;
    Word nu;

    static CuntzElement make_zero() {
      return CuntzElement{true, {}, {}};
    }
    static CuntzElement unit() {
      return CuntzElement{};
    }
    static CuntzElement generator(Letter i) {
      return CuntzElement{false, {i}, {}};
    }

    CuntzElement inverse() const {
      return zero ? *this : CuntzElement{false, nu, mu};
    }

    auto operator<=>(CuntzElement const&) const = default;
  };

  CuntzElement cuntz_multiply(CuntzElement const& a, CuntzElement const& b);
  std::string  format_cuntz(CuntzElement const& a);

  //! The elements with |mu| + |nu| <= L, plus zero.
  std::vector<CuntzElement> cuntz_ball(std::size_t n, std::size_t L);

  //! Nonzero homomorphisms S_n -> {0,1}: every assignment on the generators
  //! 0, 1, s_i, s_i* that is multiplicative on the ball of radius L.
  std::size_t cuntz_homs_to_two(std::size_t n, std::size_t L = 4);

}  // namespace gf
