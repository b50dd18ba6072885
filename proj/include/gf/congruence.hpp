#pragma once

// Congruences on a finite inverse semigroup S and on its semilattice E(S).

#include <cstddef>
#include <utility>
#include <vector>

#include "gf/core.hpp"

namespace gf {

  //! An equivalence on 0..n-1 stored as a canonical class array: class_of(s)
  //! is the least member of the class of s. Compatibility with the product is
  //! a property of a (semigroup, partition) pair and is checked separately by
  //! is_congruence.
  class Congruence {
   public:
    //! Canonicalises an arbitrary labelling.
    explicit Congruence(std::vector<std::size_t> const& labels);

    static Congruence identity(std::size_t n);
    static Congruence full(std::size_t n);

    std::size_t size() const noexcept {
      return _class_of.size();
    }
    std::size_t class_of(element_id s) const {
      return _class_of.at(s);
    }
    bool related(element_id s, element_id t) const {
      return class_of(s) == class_of(t);
    }
    std::vector<std::size_t> const& labels() const noexcept {
      return _class_of;
    }
    std::size_t number_of_classes() const;
    std::vector<std::vector<element_id>> classes() const;

    //! True iff every class of *this lies inside a class of \p other.
    bool refines(Congruence const& other) const;

    bool operator==(Congruence const&) const = default;

   private:
    std::vector<std::size_t> _class_of;
  };

  //! An equivalence on E(S). Indexed by element id; non-idempotents carry
  //! gf::undefined. Class ids are least member ids.
  class IdempotentCongruence {
   public:
    //! \p labels has one entry per element of S; entries at non-idempotents
    //! are ignored.
    IdempotentCongruence(FiniteInverseSemigroup const& S,
                         std::vector<std::size_t> const& labels);

    static IdempotentCongruence identity(FiniteInverseSemigroup const& S);
    static IdempotentCongruence full(FiniteInverseSemigroup const& S);

    std::size_t class_of(element_id e) const;
    bool        related(element_id e, element_id f) const {
      return class_of(e) == class_of(f);
    }
    std::vector<std::size_t> const& labels() const noexcept {
      return _class_of;
    }
    std::size_t number_of_classes() const;

    bool operator==(IdempotentCongruence const&) const = default;

   private:
    std::vector<std::size_t> _class_of;
  };

  using PairList = std::vector<std::pair<element_id, element_id>>;

  //! True iff \p c is compatible with left and right multiplication.
  bool is_congruence(FiniteInverseSemigroup const& S, Congruence const& c);

  //! Least congruence containing \p pairs (union-find with a translation
  //! worklist).
  Congruence close(FiniteInverseSemigroup const& S, PairList const& pairs);

  //! Compatible with the product of E(S).
  bool is_congruence_on_idempotents(FiniteInverseSemigroup const& S,
                                    IdempotentCongruence const&   rho);
  //! Compatible and closed under e -> ses* for all s.
  bool is_normal_on_idempotents(FiniteInverseSemigroup const& S,
                                IdempotentCongruence const&   rho);

  IdempotentCongruence restrict_to_idempotents(FiniteInverseSemigroup const& S,
                                               Congruence const&             nu);

  //! The minimum congruence on S whose restriction to E(S) is \p rho. The
  //! witness idempotent is searched across the whole rho-class of s*s.
  //! Throws NotNormal.
  Congruence nu_min(FiniteInverseSemigroup const& S, IdempotentCongruence const& rho);

  struct Quotient {
    FiniteInverseSemigroup semigroup;
    SemigroupHom           map;
  };

  //! S/nu; class k of the result is the k-th class of nu in ascending order
  //! of least member; names are "{a,b,...}".
  Quotient quotient(FiniteInverseSemigroup const& S, Congruence const& nu);

  //! q^{-1}(E(S/nu)), ascending.
  std::vector<element_id> kernel(FiniteInverseSemigroup const& S, Congruence const& nu);

  //! Normal subsemigroup: contains E(S), closed under product, inverse, and
  //! conjugation s n s*.
  bool is_normal_subsemigroup(FiniteInverseSemigroup const& S,
                              std::vector<element_id> const& members);

  //! nu_{rho_Clif, min} with rho_Clif separating E(S) by fixed characters.
  Congruence least_clifford(FiniteInverseSemigroup const& S);
  //! close({(s*s, ss*)}).
  Congruence least_clifford_oracle(FiniteInverseSemigroup const& S);
  //! close({(st, ts)}).
  Congruence least_commutative(FiniteInverseSemigroup const& S);

  //! (s,t) related iff phi(s) = phi(t) for every homomorphism phi from S to
  //! Z_k with a zero adjoined, 1 <= k <= max_order. Brute force over images
  //! of a generating set.
  Congruence nu_ab_oracle(FiniteInverseSemigroup const& S, std::size_t max_order);

  //! S / nu_{E x E, min}.
  Quotient maximal_group_image(FiniteInverseSemigroup const& S);

  //! All congruences on S: the identity plus every join of principal
  //! congruences. Sorted by label array.
  std::vector<Congruence> all_congruences(FiniteInverseSemigroup const& S);

  //! All normal congruences on E(S), by enumerating set partitions of E(S).
  //! Throws SearchBudgetExceeded when |E(S)| > max_idempotents.
  std::vector<IdempotentCongruence>
  normal_idempotent_congruences(FiniteInverseSemigroup const& S,
                                std::size_t max_idempotents = 10);

}  // namespace gf
