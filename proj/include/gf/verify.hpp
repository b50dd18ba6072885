#pragma once

// Finite-instance checks of the isomorphism theorems relating a semigroup
// quotient to restrictions and quotients of the universal groupoid.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gf/congruence.hpp"
#include "gf/core.hpp"
#include "gf/groupoid.hpp"
#include "gf/spectrum.hpp"

namespace gf {

  enum class Verdict { verified, refuted, budget_exceeded };

  std::string to_string(Verdict v);

  struct TheoremReport {
    std::string theorem;
    std::string semigroup;
    std::string congruence;  // empty when the theorem takes no congruence
    Verdict     verdict = Verdict::refuted;
    //! Arrow map from the first side to the second; present on every
    //! verified isomorphism theorem.
    std::optional<std::vector<arrow_id>> certificate;
    std::string                          refutation;
    //! Intermediate identities checked on the way, in order.
    std::vector<std::string> checks;
    //! Observations that are not pass/fail conditions.
    std::vector<std::string> notes;
    std::size_t              nodes        = 0;
    double                   wall_time_ms = 0;

    bool verified() const noexcept {
      return verdict == Verdict::verified;
    }
  };

  struct NamedCongruence {
    std::string name;
    Congruence  congruence;
  };

  struct PresentedSpec {
    enum class Kind { fcis, cuntz };
    Kind        kind;
    std::size_t rank;      // |X| or n
    std::string alphabet;  // letters for FCIS words
  };

  //! One corpus entry: a finite semigroup with named congruences, or a
  //! presented semigroup.
  struct Instance {
    std::string                           name;
    std::optional<FiniteInverseSemigroup> semigroup;
    std::optional<PresentedSpec>          presented;
    std::vector<NamedCongruence>          congruences;
  };

  //! F_nu by enumerating the characters of E(S/nu) and pulling each back
  //! along the quotient map.
  CharacterSet pullback_characters(FiniteInverseSemigroup const& S, Congruence const& nu);

  //! The group S(xi): the maximal subgroup of S/nu_xi at the image of the
  //! base of xi, with its member element ids in the quotient.
  struct StructureGroup {
    Quotient                quotient;
    std::vector<element_id> members;
    bool                    zero_group;  // S/nu_xi = S(xi) u {0}
  };
  StructureGroup structure_group(FiniteInverseSemigroup const& S, Character xi);

  TheoremReport verify_main_theorem(FiniteInverseSemigroup const& S,
                                    std::string const&            semigroup_name,
                                    NamedCongruence const&        nu,
                                    std::size_t                   budget);
  TheoremReport verify_min_restriction(FiniteInverseSemigroup const& S,
                                       std::string const&            semigroup_name,
                                       std::string const&            rho_name,
                                       IdempotentCongruence const&   rho,
                                       std::size_t                   budget);
  TheoremReport verify_clifford_theorem(FiniteInverseSemigroup const& S,
                                        std::string const&            semigroup_name,
                                        std::size_t                   budget);
  TheoremReport verify_abelianization_theorem(FiniteInverseSemigroup const& S,
                                              std::string const&            semigroup_name,
                                              std::size_t                   budget);
  //! Throws NotClifford.
  TheoremReport verify_clifford_structure(FiniteInverseSemigroup const& S,
                                          std::string const&            semigroup_name,
                                          std::size_t                   budget);
  TheoremReport verify_fixed_point_bound(FiniteInverseSemigroup const& S,
                                         std::string const&            semigroup_name);
  //! rho -> F_rho and F -> rho_F are mutually inverse between normal
  //! congruences on E(S) and unital multiplicative invariant sets.
  TheoremReport verify_correspondence(FiniteInverseSemigroup const& S,
                                      std::string const&            semigroup_name);

  //! Spectrum and fibre level checks on FCIS(X): character count, all
  //! characters fixed, the normal-form oracle sweep against \p targets, and
  //! the quotients by chi_A on sampled elements.
  TheoremReport verify_fcis(PresentedSpec const&                       spec,
                            std::string const&                         name,
                            std::vector<FiniteInverseSemigroup> const& targets,
                            std::uint64_t                              seed);
  //! At most one nonzero homomorphism S_n -> {0,1}.
  TheoremReport verify_cuntz_fixed_points(PresentedSpec const& spec, std::string const& name);

  inline std::vector<std::string> const theorem_names{"main",
                                                      "min-restriction",
                                                      "clifford",
                                                      "abelianization",
                                                      "clifford-structure",
                                                      "fixed-points",
                                                      "correspondence"};

  struct RunOptions {
    std::size_t                         budget = default_search_budget;
    std::uint64_t                       seed   = 0;
    std::vector<FiniteInverseSemigroup> fcis_targets;  // Clifford, small
  };

  //! The congruences the main theorem runs over: identity, full,
  //! least_clifford, least_commutative, then the named ones.
  std::vector<NamedCongruence> standard_congruences(Instance const& instance);

  //! Reports for one theorem name (or "all") on one instance. Theorems that
  //! do not apply to the instance produce no report. Throws Error on an
  //! unknown theorem name.
  std::vector<TheoremReport> run_theorem(Instance const&    instance,
                                         std::string const& theorem,
                                         RunOptions const&  options);

}  // namespace gf
