#include "gf/spectrum.hpp"

#include <algorithm>
#include <map>

namespace gf {

  CharacterSet::CharacterSet(std::vector<element_id> bases) : _bases(std::move(bases)) {
    std::sort(_bases.begin(), _bases.end());
    _bases.erase(std::unique(_bases.begin(), _bases.end()), _bases.end());
  }

  bool CharacterSet::contains(Character xi) const {
    return std::binary_search(_bases.begin(), _bases.end(), xi.base);
  }

  void CharacterSet::insert(Character xi) {
    auto it = std::lower_bound(_bases.begin(), _bases.end(), xi.base);
    if (it == _bases.end() || *it != xi.base) {
      _bases.insert(it, xi.base);
    }
  }

  CharacterSet enumerate_characters(FiniteInverseSemigroup const& S) {
    return CharacterSet(S.idempotents());
  }

  int evaluate(FiniteInverseSemigroup const& S, Character xi, element_id f) {
    if (!S.is_idempotent(f) || !S.is_idempotent(xi.base)) {
      throw NotIdempotent("evaluate: character base and argument must be idempotent");
    }
    return S.product(xi.base, f) == xi.base ? 1 : 0;
  }

  element_id minimum_idempotent(FiniteInverseSemigroup const& S) {
    element_id m = S.idempotents().front();
    for (element_id e : S.idempotents()) {
      m = S.product(m, e);
    }
    return m;
  }

  Character constant_one(FiniteInverseSemigroup const& S) {
    return Character{minimum_idempotent(S)};
  }

  std::optional<Character> character_with_support(FiniteInverseSemigroup const& S,
                                                  std::vector<bool> const& support) {
    GF_ASSERT(support.size() == S.size(), "support mask has wrong length");
    std::optional<element_id> base;
    for (element_id e : S.idempotents()) {
      if (support[e]) {
        base = base ? S.product(*base, e) : e;
      }
    }
    if (!base) {
      return std::nullopt;
    }
    for (element_id e = 0; e < S.size(); ++e) {
      bool const above = S.is_idempotent(e) && S.product(*base, e) == *base;
      if (above != static_cast<bool>(support[e])) {
        return std::nullopt;
      }
    }
    return Character{*base};
  }

  Character spectral_action(FiniteInverseSemigroup const& S, element_id s, Character xi) {
    element_id const si = S.inverse(s);
    if (evaluate(S, xi, S.product(si, s)) != 1) {
      throw OutsideDomain("spectral_action: character is zero on s*s");
    }
    Character const moved{S.product({s, xi.base, si})};
    for (element_id e : S.idempotents()) {
      GF_ASSERT(evaluate(S, moved, e) == evaluate(S, xi, S.product({si, e, s})),
                "conjugated base disagrees with the pointwise spectral action");
    }
    return moved;
  }

  std::optional<Character> multiply(FiniteInverseSemigroup const& S, Character a, Character b) {
    std::vector<bool> support(S.size(), false);
    bool              any = false;
    for (element_id e : S.idempotents()) {
      support[e] = evaluate(S, a, e) == 1 && evaluate(S, b, e) == 1;
      any        = any || support[e];
    }
    if (!any) {
      return std::nullopt;
    }
    auto c = character_with_support(S, support);
    GF_ASSERT(c.has_value(), "product of characters is not a character");
    return c;
  }

  bool is_fixed(FiniteInverseSemigroup const& S, Character xi) {
    for (element_id s = 0; s < S.size(); ++s) {
      element_id const si = S.inverse(s);
      if (evaluate(S, xi, S.product(si, s)) != 1) {
        continue;
      }
      for (element_id e : S.idempotents()) {
        if (evaluate(S, xi, S.product({si, e, s})) != evaluate(S, xi, e)) {
          return false;
        }
      }
    }
    return true;
  }

  CharacterSet fixed_characters(FiniteInverseSemigroup const& S) {
    std::vector<element_id> bases;
    for (element_id e : S.idempotents()) {
      if (is_fixed(S, Character{e})) {
        bases.push_back(e);
      }
    }
    return CharacterSet(std::move(bases));
  }

  std::vector<SemigroupHom> homs_to_two(FiniteInverseSemigroup const& S) {
    auto const                two = zero_one_semilattice();
    std::vector<SemigroupHom> out;
    for (element_id base : fixed_characters(S)) {
      Character const xi{base};
      SemigroupHom    h{std::vector<element_id>(S.size())};
      for (element_id s = 0; s < S.size(); ++s) {
        h.map[s] = static_cast<element_id>(evaluate(S, xi, S.domain_idempotent(s)));
      }
      GF_ASSERT(check_hom(S, two, h), "extension of a fixed character is not a homomorphism");
      // Restriction to E(S) recovers xi.
      std::vector<bool> support(S.size(), false);
      for (element_id e : S.idempotents()) {
        support[e] = h.map[e] == 1;
      }
      auto back = character_with_support(S, support);
      GF_ASSERT(back && *back == xi, "restriction of the extension is not the character");
      out.push_back(std::move(h));
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = i + 1; j < out.size(); ++j) {
        GF_ASSERT(!(out[i] == out[j]), "distinct fixed characters extend equally");
      }
    }
    return out;
  }

  bool is_invariant(FiniteInverseSemigroup const& S, CharacterSet const& F) {
    for (element_id base : F) {
      Character const xi{base};
      for (element_id s = 0; s < S.size(); ++s) {
        if (evaluate(S, xi, S.domain_idempotent(s)) == 1
            && !F.contains(spectral_action(S, s, xi))) {
          return false;
        }
      }
    }
    return true;
  }

  IdempotentCongruence rho_from_set(FiniteInverseSemigroup const& S, CharacterSet const& F) {
    if (!is_invariant(S, F)) {
      throw NotInvariant("rho_from_set: character set is not invariant");
    }
    std::map<std::vector<int>, std::size_t> ids;
    std::vector<std::size_t>                labels(S.size(), 0);
    for (element_id e : S.idempotents()) {
      std::vector<int> signature;
      for (element_id base : F) {
        signature.push_back(evaluate(S, Character{base}, e));
      }
      labels[e] = ids.emplace(std::move(signature), ids.size()).first->second;
    }
    IdempotentCongruence rho(S, labels);
    GF_ASSERT(is_normal_on_idempotents(S, rho), "rho_F is not normal");
    return rho;
  }

  CharacterSet set_from_rho(FiniteInverseSemigroup const& S, IdempotentCongruence const& rho) {
    if (!is_normal_on_idempotents(S, rho)) {
      throw NotNormal("set_from_rho: congruence on E(S) is not normal");
    }
    CharacterSet out;
    for (element_id c : S.idempotents()) {
      if (rho.class_of(c) != c) {
        continue;
      }
      // eta_[c](q(e)) = 1 iff q(c) <= q(e) iff q(c e) = q(c).
      std::vector<bool> support(S.size(), false);
      for (element_id e : S.idempotents()) {
        support[e] = rho.related(S.product(c, e), c);
      }
      auto xi = character_with_support(S, support);
      GF_ASSERT(xi.has_value(), "pullback of a quotient character is not a character");
      out.insert(*xi);
    }
    return out;
  }

  SetFlags classify_set(FiniteInverseSemigroup const& S, CharacterSet const& F) {
    SetFlags flags{F.contains(constant_one(S)), true, is_invariant(S, F)};
    for (element_id a : F) {
      for (element_id b : F) {
        auto p = multiply(S, Character{a}, Character{b});
        if (p && !F.contains(*p)) {
          flags.multiplicative = false;
        }
      }
    }
    return flags;
  }

  std::vector<CharacterSet>
  unital_multiplicative_invariant_sets(FiniteInverseSemigroup const& S,
                                       std::size_t                   max_idempotents) {
    auto const& E = S.idempotents();
    if (E.size() > max_idempotents) {
      throw SearchBudgetExceeded("unital_multiplicative_invariant_sets: |E(S)| = "
                                 + std::to_string(E.size()) + " exceeds "
                                 + std::to_string(max_idempotents));
    }
    std::vector<CharacterSet> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << E.size()); ++mask) {
      std::vector<element_id> bases;
      for (std::size_t i = 0; i < E.size(); ++i) {
        if (mask & (std::size_t{1} << i)) {
          bases.push_back(E[i]);
        }
      }
      CharacterSet F(std::move(bases));
      if (classify_set(S, F) == SetFlags{true, true, true}) {
        out.push_back(std::move(F));
      }
    }
    return out;
  }

}  // namespace gf
