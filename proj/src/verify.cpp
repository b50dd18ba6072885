#include "gf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include "gf/presented.hpp"

namespace gf {

  std::string to_string(Verdict v) {
    switch (v) {
      case Verdict::verified:
        return "verified";
      case Verdict::refuted:
        return "refuted";
      case Verdict::budget_exceeded:
        return "budget-exceeded";
    }
    return "refuted";
  }

  namespace {
    struct LemmaFailure {
      std::string what;
    };

    void check(TheoremReport& r, bool ok, std::string const& name) {
      if (!ok) {
        throw LemmaFailure{name};
      }
      r.checks.push_back(name);
    }

    template <typename Body>
    TheoremReport run(std::string theorem,
                      std::string semigroup,
                      std::string congruence,
                      Body&&      body) {
      TheoremReport r;
      r.theorem     = std::move(theorem);
      r.semigroup   = std::move(semigroup);
      r.congruence  = std::move(congruence);
      auto const t0 = std::chrono::steady_clock::now();
      try {
        body(r);
      } catch (LemmaFailure const& f) {
        r.verdict    = Verdict::refuted;
        r.refutation = "intermediate identity failed: " + f.what;
      } catch (SearchBudgetExceeded const& e) {
        r.verdict    = Verdict::budget_exceeded;
        r.refutation = e.what();
      } catch (InternalError const&) {
        throw;
      } catch (Error const& e) {
        r.verdict    = Verdict::refuted;
        r.refutation = e.what();
      }
      r.wall_time_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
      return r;
    }

    void conclude(TheoremReport&        r,
                  FiniteGroupoid const& lhs,
                  FiniteGroupoid const& rhs,
                  std::size_t           budget) {
      auto iso = are_isomorphic(lhs, rhs, budget);
      r.nodes += iso.nodes;
      if (iso) {
        GF_ASSERT(verify_isomorphism(lhs, rhs, *iso.certificate), "certificate does not replay");
        r.certificate = std::move(iso.certificate);
        r.verdict     = Verdict::verified;
      } else {
        r.verdict    = Verdict::refuted;
        r.refutation = iso.refutation;
      }
    }

    std::vector<arrow_id> units_of(UniversalGroupoid const& U, CharacterSet const& F) {
      std::vector<arrow_id> out;
      for (element_id e : F) {
        out.push_back(U.unit_of.at(e));
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    std::vector<arrow_id> local_index(Restriction const& R, std::size_t parent_size) {
      std::vector<arrow_id> local(parent_size, undefined);
      for (arrow_id a = 0; a < R.to_parent.size(); ++a) {
        local[R.to_parent[a]] = a;
      }
      return local;
    }

    // Germs [n, xi_e] with n in the kernel and e in F, as arrows of R.
    std::vector<arrow_id> kernel_germs(FiniteInverseSemigroup const& S,
                                       UniversalGroupoid const&      U,
                                       Restriction const&            R,
                                       std::vector<element_id> const& ker,
                                       CharacterSet const&           F) {
      auto const            local = local_index(R, U.groupoid.size());
      std::vector<arrow_id> out;
      for (element_id n : ker) {
        for (element_id e : F) {
          if (natural_order_leq(S, e, S.domain_idempotent(n))) {
            arrow_id const a = local[U.arrow_of(n, e)];
            GF_ASSERT(a != undefined, "kernel germ outside the restriction");
            out.push_back(a);
          }
        }
      }
      return out;
    }

    std::string describe_set(FiniteInverseSemigroup const& S, CharacterSet const& F) {
      std::string out = "{";
      for (element_id e : F) {
        out += (out.size() == 1 ? "" : ",") + S.name(e);
      }
      return out + "}";
    }
  }  // namespace

  CharacterSet pullback_characters(FiniteInverseSemigroup const& S, Congruence const& nu) {
    Quotient const Q = quotient(S, nu);
    CharacterSet   out;
    for (element_id eta : enumerate_characters(Q.semigroup)) {
      std::vector<bool> support(S.size(), false);
      for (element_id e : S.idempotents()) {
        support[e] = evaluate(Q.semigroup, Character{eta}, Q.map.map[e]) == 1;
      }
      auto xi = character_with_support(S, support);
      GF_ASSERT(xi.has_value(), "pullback of a character is not a character");
      out.insert(*xi);
    }
    return out;
  }

  StructureGroup structure_group(FiniteInverseSemigroup const& S, Character xi) {
    auto const rho = rho_from_set(S, CharacterSet({xi.base}));
    StructureGroup sg{quotient(S, nu_min(S, rho)), {}, false};
    auto const&      Q  = sg.quotient.semigroup;
    element_id const qe = sg.quotient.map.map[xi.base];
    for (element_id x = 0; x < Q.size(); ++x) {
      if (Q.domain_idempotent(x) == qe && Q.range_idempotent(x) == qe) {
        sg.members.push_back(x);
      }
    }
    sg.zero_group = Q.zero() && *Q.zero() != qe && sg.members.size() + 1 == Q.size();
    return sg;
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism theorems
  ////////////////////////////////////////////////////////////////////////

  TheoremReport verify_main_theorem(FiniteInverseSemigroup const& S,
                                    std::string const&            semigroup_name,
                                    NamedCongruence const&        nu,
                                    std::size_t                   budget) {
    return run("main", semigroup_name, nu.name, [&](TheoremReport& r) {
      check(r, is_congruence(S, nu.congruence), "nu is a congruence");
      Quotient const Q   = quotient(S, nu.congruence);
      auto const     lhs = universal_groupoid(Q.semigroup);

      CharacterSet const F = set_from_rho(S, restrict_to_idempotents(S, nu.congruence));
      check(r, F == pullback_characters(S, nu.congruence),
            "F_nu equals the pullback of the characters of E(S/nu)");

      auto const U   = universal_groupoid(S);
      auto const R   = restrict(U.groupoid, units_of(U, F));
      auto const ker = kernel(S, nu.congruence);
      check(r, is_normal_subsemigroup(S, ker), "ker nu is a normal subsemigroup");

      auto const germs = kernel_germs(S, U, R, ker, F);
      auto const H     = generated_subgroupoid(R.groupoid, germs);
      check(r, H == make_selection(germs), "kernel germs are closed under composition");
      check(r, is_normal_subgroupoid(R.groupoid, H), "kernel germ subgroupoid is normal");
      auto const rhs = quotient_groupoid(R.groupoid, H);

      // [s, eta o q] -> [q(s), eta]
      std::vector<arrow_id> phi(R.groupoid.size());
      std::vector<bool>     hit(lhs.groupoid.size(), false);
      for (arrow_id a = 0; a < phi.size(); ++a) {
        Germ const g = U.germs[R.to_parent[a]];
        phi[a]       = lhs.arrow_of(Q.map.map[g.element], Q.map.map[g.base]);
        hit[phi[a]]  = true;
      }
      check(r, is_groupoid_hom(R.groupoid, lhs.groupoid, phi),
            "germ map [s, eta o q] -> [q(s), eta] is a homomorphism");
      check(r, std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }),
            "germ map is surjective");
      check(r, kernel_of_hom(R.groupoid, lhs.groupoid, phi) == H,
            "kernel of the germ map is the kernel germ subgroupoid");

      conclude(r, lhs.groupoid, rhs.groupoid, budget);
    });
  }

  TheoremReport verify_min_restriction(FiniteInverseSemigroup const& S,
                                       std::string const&            semigroup_name,
                                       std::string const&            rho_name,
                                       IdempotentCongruence const&   rho,
                                       std::size_t                   budget) {
    return run("min-restriction", semigroup_name, rho_name, [&](TheoremReport& r) {
      Congruence const nu = nu_min(S, rho);
      check(r, restrict_to_idempotents(S, nu) == rho, "nu_min(rho) restricts to rho");
      CharacterSet const F = set_from_rho(S, rho);
      check(r, F == pullback_characters(S, nu),
            "F_rho equals the pullback of the characters of E(S/nu_min)");
      check(r, rho_from_set(S, F) == rho, "rho_{F_rho} = rho");
      auto const lhs = universal_groupoid(quotient(S, nu).semigroup);
      auto const U   = universal_groupoid(S);
      conclude(r, lhs.groupoid, restrict(U.groupoid, units_of(U, F)).groupoid, budget);
    });
  }

  TheoremReport verify_clifford_theorem(FiniteInverseSemigroup const& S,
                                        std::string const&            semigroup_name,
                                        std::size_t                   budget) {
    return run("clifford", semigroup_name, "least_clifford", [&](TheoremReport& r) {
      Congruence const nu = least_clifford(S);
      check(r, nu == least_clifford_oracle(S), "least_clifford equals close{(s*s, ss*)}");
      CharacterSet const fixed = fixed_characters(S);
      check(r, set_from_rho(S, restrict_to_idempotents(S, nu)) == fixed,
            "F_rho_Clif equals the fixed characters");
      auto const U = universal_groupoid(S);
      check(r, fixed_units(U.groupoid) == units_of(U, fixed),
            "fixed units of G_u(S) are the fixed characters");
      auto const lhs = universal_groupoid(quotient(S, nu).semigroup);
      conclude(r, lhs.groupoid, g_fix(U.groupoid).groupoid, budget);
    });
  }

  TheoremReport verify_abelianization_theorem(FiniteInverseSemigroup const& S,
                                              std::string const&            semigroup_name,
                                              std::size_t                   budget) {
    return run("abelianization", semigroup_name, "least_commutative", [&](TheoremReport& r) {
      Congruence const nu  = least_commutative(S);
      auto const       rho = restrict_to_idempotents(S, nu);
      check(r, rho == restrict_to_idempotents(S, least_clifford(S)),
            "nu_ab restricted to E(S) equals rho_Clif");
      CharacterSet const F = set_from_rho(S, rho);
      check(r, F == fixed_characters(S), "F_nu_ab equals the fixed characters");
      auto const U   = universal_groupoid(S);
      auto const fix = g_fix(U.groupoid);
      check(r, make_selection(kernel_germs(S, U, fix, kernel(S, nu), F))
                   == commutator_bundle(fix.groupoid),
            "kernel germ bundle equals the commutator bundle");
      auto const lhs = universal_groupoid(quotient(S, nu).semigroup);
      conclude(r, lhs.groupoid, abelianize(U.groupoid), budget);
    });
  }

  TheoremReport verify_clifford_structure(FiniteInverseSemigroup const& S,
                                          std::string const&            semigroup_name,
                                          std::size_t                   budget) {
    if (!is_clifford(S)) {
      throw NotClifford("verify_clifford_structure: " + semigroup_name + " is not Clifford");
    }
    return run("clifford-structure", semigroup_name, "", [&](TheoremReport& r) {
      auto const&                 E = S.idempotents();
      std::vector<StructureGroup> groups;
      for (element_id e : E) {
        groups.push_back(structure_group(S, Character{e}));
      }
      std::set<std::vector<element_id>> images;
      for (element_id s = 0; s < S.size(); ++s) {
        std::vector<element_id> tuple;
        for (auto const& g : groups) {
          tuple.push_back(g.quotient.map.map[s]);
        }
        images.insert(std::move(tuple));
      }
      check(r, images.size() == S.size(), "product map into the quotients S/nu_xi is injective");

      element_id const one = constant_one(S).base;
      std::size_t      zero_groups = 0;
      for (std::size_t i = 0; i < E.size(); ++i) {
        if (E[i] == one) {
          check(r, groups[i].members.size() == maximal_group_image(S).semigroup.size(),
                "S(1) is the maximal group image");
        } else if (groups[i].zero_group) {
          ++zero_groups;
        }
      }
      r.notes.push_back("S/nu_xi is a 0-group for " + std::to_string(zero_groups) + " of "
                        + std::to_string(E.size() - 1) + " characters xi != 1");

      auto const U = universal_groupoid(S);
      check(r, is_group_bundle(U.groupoid), "G_u(S) is a group bundle");
      std::vector<FiniteGroupoid> parts;
      for (std::size_t i = 0; i < E.size(); ++i) {
        auto const  iso_group = isotropy_group(U.groupoid, U.unit_of[E[i]]);
        auto        sg = group_groupoid(groups[i].quotient.semigroup, groups[i].members);
        auto const  iso = are_isomorphic(iso_group.groupoid, sg, budget);
        r.nodes += iso.nodes;
        check(r, static_cast<bool>(iso),
              "isotropy at xi_" + S.name(E[i]) + " is isomorphic to S(xi)");
        parts.push_back(std::move(sg));
      }
      conclude(r, U.groupoid, coproduct(parts), budget);
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Counting theorems
  ////////////////////////////////////////////////////////////////////////

  TheoremReport verify_fixed_point_bound(FiniteInverseSemigroup const& S,
                                         std::string const&            semigroup_name) {
    return run("fixed-points", semigroup_name, "", [&](TheoremReport& r) {
      std::size_t const homs = homs_to_two(S).size();
      check(r, homs == fixed_characters(S).size(),
            "homomorphisms to {0,1} correspond to fixed characters");
      auto const  U     = universal_groupoid(S);
      auto const  sets  = unital_multiplicative_invariant_sets(S);
      std::size_t worst = 0;
      for (auto const& F : sets) {
        std::size_t const k = fixed_units(restrict(U.groupoid, units_of(U, F)).groupoid).size();
        worst               = std::max(worst, k);
        check(r, k <= homs,
              "F = " + describe_set(S, F) + " has " + std::to_string(k)
                  + " fixed units, at most " + std::to_string(homs));
      }
      r.notes.push_back(std::to_string(sets.size())
                        + " unital multiplicative invariant sets; most fixed units "
                        + std::to_string(worst) + "; homomorphisms " + std::to_string(homs));
      r.verdict = Verdict::verified;
    });
  }

  TheoremReport verify_correspondence(FiniteInverseSemigroup const& S,
                                      std::string const&            semigroup_name) {
    return run("correspondence", semigroup_name, "", [&](TheoremReport& r) {
      auto const normal = normal_idempotent_congruences(S);
      auto const sets   = unital_multiplicative_invariant_sets(S);
      for (auto const& rho : normal) {
        CharacterSet const F = set_from_rho(S, rho);
        if (std::find(sets.begin(), sets.end(), F) == sets.end()) {
          throw LemmaFailure{"F_rho is not unital multiplicative invariant"};
        }
        if (!(rho_from_set(S, F) == rho)) {
          throw LemmaFailure{"rho_{F_rho} differs from rho"};
        }
      }
      r.checks.push_back("rho -> F_rho -> rho is the identity on "
                         + std::to_string(normal.size()) + " normal congruences");
      for (auto const& F : sets) {
        auto const rho = rho_from_set(S, F);
        if (!is_normal_on_idempotents(S, rho) || !(set_from_rho(S, rho) == F)) {
          throw LemmaFailure{"F_{rho_F} differs from F = " + describe_set(S, F)};
        }
      }
      r.checks.push_back("F -> rho_F -> F is the identity on " + std::to_string(sets.size())
                         + " unital multiplicative invariant sets");
      check(r, normal.size() == sets.size(), "both sides have the same size");
      r.verdict = Verdict::verified;
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Presented semigroups
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::optional<Word> multiply_in_free_group_with_zero(std::optional<Word> const& a,
                                                         std::optional<Word> const& b) {
      if (!a || !b) {
        return std::nullopt;
      }
      Word w = *a;
      w.insert(w.end(), b->begin(), b->end());
      return free_reduce(std::move(w));
    }

    // Reduced words of length <= L over the letters of A (including empty).
    std::vector<Word> reduced_words(LetterSet A, std::size_t L) {
      std::vector<Word> out{Word{}};
      for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].size() == L) {
          continue;
        }
        for (Letter x = 1; x <= static_cast<Letter>(max_alphabet); ++x) {
          if ((A >> (x - 1)) & 1U) {
            for (Letter y : {x, -x}) {
              if (out[i].empty() || out[i].back() != -y) {
                Word w = out[i];
                w.push_back(y);
                out.push_back(std::move(w));
              }
            }
          }
        }
      }
      return out;
    }
  }  // namespace

  TheoremReport verify_fcis(PresentedSpec const&                       spec,
                            std::string const&                         name,
                            std::vector<FiniteInverseSemigroup> const& targets,
                            std::uint64_t                              seed) {
    return run("clifford-structure", name, "", [&](TheoremReport& r) {
      std::size_t const n = spec.rank;
      auto const        chars = fcis_characters(n);
      check(r, chars.size() == (std::size_t{1} << n) - 1, "FCIS(X) has 2^|X| - 1 characters");

      std::mt19937_64                           rng(seed);
      std::uniform_int_distribution<std::size_t> length(1, 6);
      std::uniform_int_distribution<Letter>      letter(1, static_cast<Letter>(n));
      std::uniform_int_distribution<int>         sign(0, 1);
      std::vector<Word>                          words;
      for (int i = 0; i < 60; ++i) {
        Word w(length(rng));
        for (Letter& x : w) {
          x = letter(rng) * (sign(rng) == 0 ? 1 : -1);
        }
        words.push_back(std::move(w));
      }
      std::vector<FcisElement> samples;
      for (auto const& w : words) {
        samples.push_back(FcisElement::from_word(w));
      }

      bool clifford = true, hom = true, munn = true;
      for (std::size_t i = 0; i < words.size(); ++i) {
        auto const& s = samples[i];
        clifford = clifford && s.inverse() * s == s * s.inverse()
                   && s.inverse() * s == FcisElement::idempotent(s.support());
        munn = munn && munn_to_fcis(MunnTree::from_word(words[i])) == s;
        for (std::size_t j = 0; j < words.size(); ++j) {
          Word uv = words[i];
          uv.insert(uv.end(), words[j].begin(), words[j].end());
          hom = hom && FcisElement::from_word(uv) == s * samples[j];
          munn = munn
                 && munn_to_fcis(MunnTree::from_word(words[i]) * MunnTree::from_word(words[j]))
                        == s * samples[j];
        }
      }
      check(r, clifford, "s*s = ss* = e_C on sampled elements");
      check(r, hom, "word -> normal form is multiplicative on sampled words");
      check(r, munn, "the Clifford quotient of Munn trees agrees with the normal form");

      bool fixed = true;
      for (LetterSet A : chars) {
        for (auto const& s : samples) {
          if (fcis_evaluate_char(A, s.inverse() * s) != 1) {
            continue;
          }
          for (LetterSet B : chars) {
            auto const e = FcisElement::idempotent(B);
            fixed = fixed && fcis_evaluate_char(A, s.inverse() * e * s) == fcis_evaluate_char(A, e);
          }
        }
      }
      check(r, fixed, "every character chi_A is fixed on sampled elements");

      std::size_t const max_length = n <= 3 ? 6 : 4;
      auto const        bad        = fcis_oracle_sweep(n, max_length, targets);
      if (bad) {
        throw LemmaFailure{"normal forms of " + format_word(bad->first, spec.alphabet) + " and "
                           + format_word(bad->second, spec.alphabet)
                           + " agree but a Clifford target separates them"};
      }
      r.checks.push_back("no Clifford target separates equal normal forms (words of length <= "
                         + std::to_string(max_length) + ", " + std::to_string(targets.size())
                         + " targets)");

      bool quotient_hom = true, faithful = true, onto = true;
      for (LetterSet A : chars) {
        for (std::size_t i = 0; i < samples.size(); ++i) {
          auto const qs = fcis_quotient_by_char(A, samples[i]);
          for (std::size_t j = 0; j < samples.size(); ++j) {
            auto const qt = fcis_quotient_by_char(A, samples[j]);
            quotient_hom  = quotient_hom
                           && fcis_quotient_by_char(A, samples[i] * samples[j])
                                  == multiply_in_free_group_with_zero(qs, qt);
            if (qs && qt) {
              faithful = faithful
                         && fcis_nu_related(A, samples[i], samples[j], n) == (*qs == *qt);
            }
          }
        }
        for (auto const& w : reduced_words(A, 3)) {
          onto = onto && fcis_quotient_by_char(A, FcisElement(A, w)) == w;
        }
      }
      check(r, quotient_hom, "the quotient by chi_A is a homomorphism onto F(A) u {0}");
      check(r, faithful, "nu_{chi_A} on elements with support in A is equality in F(A)");
      check(r, onto, "every reduced word over A of length <= 3 is hit");
      r.verdict = Verdict::verified;
    });
  }

  TheoremReport verify_cuntz_fixed_points(PresentedSpec const& spec, std::string const& name) {
    return run("fixed-points", name, "", [&](TheoremReport& r) {
      std::size_t const homs = cuntz_homs_to_two(spec.rank);
      r.notes.push_back("nonzero homomorphisms to {0,1} on the ball of radius 4: "
                        + std::to_string(homs));
      check(r, homs <= 1, "at most one nonzero homomorphism to {0,1}");
      r.verdict = Verdict::verified;
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Dispatch
  ////////////////////////////////////////////////////////////////////////

  std::vector<NamedCongruence> standard_congruences(Instance const& instance) {
    auto const&                  S = *instance.semigroup;
    std::vector<NamedCongruence> out{{"identity", Congruence::identity(S.size())},
                                     {"full", Congruence::full(S.size())},
                                     {"least_clifford", least_clifford(S)},
                                     {"least_commutative", least_commutative(S)}};
    out.insert(out.end(), instance.congruences.begin(), instance.congruences.end());
    return out;
  }

  std::vector<TheoremReport> run_theorem(Instance const&    instance,
                                         std::string const& theorem,
                                         RunOptions const&  options) {
    if (theorem != "all"
        && std::find(theorem_names.begin(), theorem_names.end(), theorem) == theorem_names.end()) {
      throw Error("unknown theorem '" + theorem + "'");
    }
    auto const wants = [&](char const* t) { return theorem == "all" || theorem == t; };

    std::vector<TheoremReport> out;
    if (instance.presented) {
      auto const& spec = *instance.presented;
      if (spec.kind == PresentedSpec::Kind::fcis && wants("clifford-structure")) {
        out.push_back(verify_fcis(spec, instance.name, options.fcis_targets, options.seed));
      }
      if (spec.kind == PresentedSpec::Kind::cuntz && wants("fixed-points")) {
        out.push_back(verify_cuntz_fixed_points(spec, instance.name));
      }
      return out;
    }

    auto const& S    = *instance.semigroup;
    auto const  cons = standard_congruences(instance);
    if (wants("main")) {
      for (auto const& nu : cons) {
        out.push_back(verify_main_theorem(S, instance.name, nu, options.budget));
      }
    }
    if (wants("min-restriction")) {
      std::vector<std::pair<std::string, IdempotentCongruence>> rhos;
      auto add = [&](std::string name, IdempotentCongruence rho) {
        for (auto const& [_, seen] : rhos) {
          if (seen == rho) {
            return;
          }
        }
        rhos.emplace_back(std::move(name), std::move(rho));
      };
      for (auto const& nu : cons) {
        add(nu.name + "|E", restrict_to_idempotents(S, nu.congruence));
      }
      if (S.idempotents().size() <= 6) {
        auto const normal = normal_idempotent_congruences(S);
        for (std::size_t i = 0; i < normal.size(); ++i) {
          add("normal_" + std::to_string(i), normal[i]);
        }
      }
      for (auto const& [name, rho] : rhos) {
        out.push_back(verify_min_restriction(S, instance.name, name, rho, options.budget));
      }
    }
    if (wants("clifford")) {
      out.push_back(verify_clifford_theorem(S, instance.name, options.budget));
    }
    if (wants("abelianization")) {
      out.push_back(verify_abelianization_theorem(S, instance.name, options.budget));
    }
    if (wants("clifford-structure") && is_clifford(S)) {
      out.push_back(verify_clifford_structure(S, instance.name, options.budget));
    }
    if (wants("fixed-points")) {
      out.push_back(verify_fixed_point_bound(S, instance.name));
    }
    if (wants("correspondence")) {
      out.push_back(verify_correspondence(S, instance.name));
    }
    return out;
  }

}  // namespace gf
