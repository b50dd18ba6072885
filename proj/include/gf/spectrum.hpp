#pragma once

// Characters of a finite semilattice E(S) and the spectral action of S.
//
// Every character of a finite semilattice is the indicator of the up-set of
// the minimum of its support, so a character is stored as that minimum (its
// base). The constant-1 character has the minimum idempotent of S as base.

#include <compare>
#include <optional>
#include <vector>

#include "gf/congruence.hpp"
#include "gf/core.hpp"

namespace gf {

  struct Character {
    element_id base;

    auto operator<=>(Character const&) const = default;
  };

  //! A set of characters, kept as sorted unique bases.
  class CharacterSet {
   public:
    CharacterSet() = default;
    explicit CharacterSet(std::vector<element_id> bases);

    bool contains(Character xi) const;
    void insert(Character xi);

    std::size_t size() const noexcept {
      return _bases.size();
    }
    bool empty() const noexcept {
      return _bases.empty();
    }
    std::vector<element_id> const& bases() const noexcept {
      return _bases;
    }
    auto begin() const noexcept {
      return _bases.begin();
    }
    auto end() const noexcept {
      return _bases.end();
    }

    bool operator==(CharacterSet const&) const = default;

   private:
    std::vector<element_id> _bases;
  };

  //! One character per idempotent.
  CharacterSet enumerate_characters(FiniteInverseSemigroup const& S);

  //! xi(f): 1 iff f >= base. Throws NotIdempotent.
  int evaluate(FiniteInverseSemigroup const& S, Character xi, element_id f);

  //! The minimum idempotent of S (exists because E(S) is finite).
  element_id minimum_idempotent(FiniteInverseSemigroup const& S);
  Character  constant_one(FiniteInverseSemigroup const& S);

  //! Character whose support is exactly \p support, if \p support is the
  //! support of some character (nonempty up-set closed under products).
  std::optional<Character> character_with_support(FiniteInverseSemigroup const& S,
                                                  std::vector<bool> const& support);

  //! beta_s(xi)(e) = xi(s* e s); defined when xi(s*s) = 1, else throws
  //! OutsideDomain. The result is computed by conjugating the base and is
  //! checked against the pointwise definition.
  Character spectral_action(FiniteInverseSemigroup const& S, element_id s, Character xi);

  //! Pointwise product, or nullopt if the product is the zero map.
  std::optional<Character> multiply(FiniteInverseSemigroup const& S, Character a, Character b);

  //! xi(s* e s) = xi(e) whenever xi(s*s) = 1, for all s and idempotent e.
  bool           is_fixed(FiniteInverseSemigroup const& S, Character xi);
  CharacterSet   fixed_characters(FiniteInverseSemigroup const& S);

  //! All nonzero homomorphisms S -> ({0,1}, .), each the extension
  //! s -> xi(s*s) of a fixed character xi, in the order of fixed_characters.
  //! The bijection with fixed characters is checked in both directions.
  std::vector<SemigroupHom> homs_to_two(FiniteInverseSemigroup const& S);

  bool is_invariant(FiniteInverseSemigroup const& S, CharacterSet const& F);

  //! (e,f) related iff xi(e) = xi(f) for all xi in F. Throws NotInvariant.
  IdempotentCongruence rho_from_set(FiniteInverseSemigroup const& S, CharacterSet const& F);

  //! Pullbacks eta o q of the characters eta of E(S)/rho. Throws NotNormal.
  CharacterSet set_from_rho(FiniteInverseSemigroup const& S, IdempotentCongruence const& rho);

  struct SetFlags {
    bool unital;
    bool multiplicative;
    bool invariant;

    bool operator==(SetFlags const&) const = default;
  };

  SetFlags classify_set(FiniteInverseSemigroup const& S, CharacterSet const& F);

  //! Every unital multiplicative invariant subset of the spectrum, by
  //! enumerating subsets. Throws SearchBudgetExceeded when |E(S)| exceeds
  //! \p max_idempotents.
  std::vector<CharacterSet>
  unital_multiplicative_invariant_sets(FiniteInverseSemigroup const& S,
                                       std::size_t max_idempotents = 16);

}  // namespace gf
