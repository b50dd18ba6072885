#pragma once

// Finite discrete groupoids: the universal (germ) groupoid of a finite
// inverse semigroup, restrictions, normal subgroupoids and quotients,
// isotropy, fixed points, abelianisation, and isomorphism search.

#include <optional>
#include <string>
#include <vector>

#include "gf/core.hpp"

namespace gf {

  using arrow_id = std::size_t;

  //! A groupoid on arrows 0..m-1 with materialised composition table.
  //!
  //! Units are the arrows x with source(x) = x. compose(a, b) is defined
  //! exactly when source(a) = range(b) and is gf::undefined otherwise. The
  //! constructor checks the groupoid axioms and throws GroupoidAxiomError.
  class FiniteGroupoid {
   public:
    FiniteGroupoid() = default;
    FiniteGroupoid(std::vector<std::string> labels,
                   std::vector<arrow_id>    source,
                   std::vector<arrow_id>    range,
                   std::vector<arrow_id>    compose,
                   std::vector<arrow_id>    inverse);

    std::size_t size() const noexcept {
      return _labels.size();
    }
    arrow_id source(arrow_id a) const {
      return _source.at(a);
    }
    arrow_id range(arrow_id a) const {
      return _range.at(a);
    }
    arrow_id inverse(arrow_id a) const {
      return _inverse.at(a);
    }
    arrow_id compose(arrow_id a, arrow_id b) const {
      return _compose.at(a * size() + b);
    }
    bool is_unit(arrow_id a) const {
      return _source.at(a) == a;
    }
    std::vector<arrow_id> units() const;
    std::string const&    label(arrow_id a) const {
      return _labels.at(a);
    }
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

   private:
    std::vector<std::string> _labels;
    std::vector<arrow_id>    _source;
    std::vector<arrow_id>    _range;
    std::vector<arrow_id>    _compose;
    std::vector<arrow_id>    _inverse;
  };

  //! A set of arrows, sorted and unique.
  struct SubgroupoidSelection {
    std::vector<arrow_id> members;

    bool contains(arrow_id a) const;
    bool operator==(SubgroupoidSelection const&) const = default;
  };

  SubgroupoidSelection make_selection(std::vector<arrow_id> arrows);

  //! A groupoid carved out of a parent, with the embedding of its arrows.
  struct Restriction {
    FiniteGroupoid        groupoid;
    std::vector<arrow_id> to_parent;
  };

  struct GroupoidQuotient {
    FiniteGroupoid        groupoid;
    std::vector<arrow_id> projection;
  };

  ////////////////////////////////////////////////////////////////////////
  // Germ groupoid of the spectral action
  ////////////////////////////////////////////////////////////////////////

  //! Germ [s, xi_base] with base <= s*s; canonical representative (s base, base).
  struct Germ {
    element_id element;
    element_id base;

    bool operator==(Germ const&) const = default;
  };

  //! Germ equality by definition: same character and s f = t f for some
  //! idempotent f with xi(f) = 1.
  bool germs_equal(FiniteInverseSemigroup const& S, Germ a, Germ b);

  struct UniversalGroupoid {
    FiniteGroupoid        groupoid;
    std::vector<Germ>     germs;    // canonical representative per arrow
    std::vector<arrow_id> unit_of;  // indexed by idempotent element id

    //! Arrow [s, xi_e]; requires e <= s*s.
    arrow_id arrow_of(element_id s, element_id e) const;

    std::size_t           n = 0;
    std::vector<arrow_id> index;  // n x n, (s, e) -> arrow
  };

  //! G_u(S): germs of the spectral action on the (finite) spectrum.
  UniversalGroupoid universal_groupoid(FiniteInverseSemigroup const& S);

  //! The groupoid with arrows S, d(s) = s*s, r(s) = ss*, and st defined when
  //! s*s = tt*.
  FiniteGroupoid underlying_groupoid(FiniteInverseSemigroup const& S);

  //! A one-unit groupoid from a subgroup (\p members, closed under the
  //! product, containing a single idempotent) of S.
  FiniteGroupoid group_groupoid(FiniteInverseSemigroup const& S,
                                std::vector<element_id> const& members);

  //! Disjoint union.
  FiniteGroupoid coproduct(std::vector<FiniteGroupoid> const& parts);

  ////////////////////////////////////////////////////////////////////////
  // Subgroupoids, restriction, quotients
  ////////////////////////////////////////////////////////////////////////

  bool is_subgroupoid(FiniteGroupoid const& G, SubgroupoidSelection const& H);
  SubgroupoidSelection generated_subgroupoid(FiniteGroupoid const&        G,
                                             std::vector<arrow_id> const& generators);

  //! The groupoid on a subset closed under composition and inverse.
  Restriction subgroupoid(FiniteGroupoid const& G, SubgroupoidSelection const& H);

  bool is_invariant_set(FiniteGroupoid const& G, std::vector<arrow_id> const& units);

  //! G_U = d^{-1}(U) for an invariant set of units. Throws NotInvariantSet.
  Restriction restrict(FiniteGroupoid const& G, std::vector<arrow_id> const& units);

  //! Units <= H <= Iso(G) and conjugation invariant. Throws NotASubgroupoid.
  bool is_normal_subgroupoid(FiniteGroupoid const& G, SubgroupoidSelection const& H);

  //! G/H under a ~ b iff d(a) = d(b) and a b^{-1} in H. Throws NotNormal.
  GroupoidQuotient quotient_groupoid(FiniteGroupoid const& G, SubgroupoidSelection const& H);

  //! Functoriality of \p map : G -> K.
  bool is_groupoid_hom(FiniteGroupoid const&        G,
                       FiniteGroupoid const&        K,
                       std::vector<arrow_id> const& map);

  //! ker = map^{-1}(units of K) for a homomorphism injective on units. Also
  //! checks that the induced map G/ker -> K is injective. Throws
  //! NotInjectiveOnUnits.
  SubgroupoidSelection kernel_of_hom(FiniteGroupoid const&        G,
                                     FiniteGroupoid const&        K,
                                     std::vector<arrow_id> const& map);

  ////////////////////////////////////////////////////////////////////////
  // Isotropy and abelianisation
  ////////////////////////////////////////////////////////////////////////

  std::vector<arrow_id> fixed_units(FiniteGroupoid const& G);
  SubgroupoidSelection  iso_bundle(FiniteGroupoid const& G);
  bool                  is_group_bundle(FiniteGroupoid const& G);
  Restriction           g_fix(FiniteGroupoid const& G);
  Restriction           isotropy_group(FiniteGroupoid const& G, arrow_id unit);

  //! Union over units of the commutator subgroups of the isotropy groups.
  //! Throws NotGroupBundle.
  SubgroupoidSelection commutator_bundle(FiniteGroupoid const& G);

  //! G_fix / [G_fix, G_fix].
  FiniteGroupoid abelianize(FiniteGroupoid const& G);

  //! The connected components (orbits of units), each sorted.
  std::vector<std::vector<arrow_id>> orbits(FiniteGroupoid const& G);

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::size_t default_search_budget = 10'000'000;

  //! GF_BUDGET from the environment, or default_search_budget.
  std::size_t search_budget_from_env();

  struct IsomorphismResult {
    std::optional<std::vector<arrow_id>> certificate;  // arrow map G1 -> G2
    std::string                          refutation;
    std::size_t                          nodes = 0;

    explicit operator bool() const noexcept {
      return certificate.has_value();
    }
  };

  //! Cheap invariants first, then component matching with group isomorphism
  //! by generator-image backtracking. Throws SearchBudgetExceeded once more
  //! than \p budget search nodes are visited.
  IsomorphismResult are_isomorphic(FiniteGroupoid const& G1,
                                   FiniteGroupoid const& G2,
                                   std::size_t           budget = default_search_budget);

  //! Replays every structure map of \p map.
  bool verify_isomorphism(FiniteGroupoid const&        G1,
                          FiniteGroupoid const&        G2,
                          std::vector<arrow_id> const& map);

  //! Exponent of a one-unit groupoid (group).
  std::size_t group_exponent(FiniteGroupoid const& G);
  bool        is_abelian_bundle(FiniteGroupoid const& G);

}  // namespace gf
