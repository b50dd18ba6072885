#include "gf/groupoid.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "gf/spectrum.hpp"

namespace gf {

  namespace {
    [[noreturn]] void axiom_failure(std::string const& what, arrow_id a, arrow_id b = undefined) {
      std::ostringstream os;
      os << "groupoid axiom violated: " << what << " at arrow " << a;
      if (b != undefined) {
        os << ", " << b;
      }
      throw GroupoidAxiomError(os.str());
    }

    std::string join_labels(FiniteGroupoid const& G, std::vector<arrow_id> const& as) {
      if (as.size() == 1) {
        return G.label(as.front());
      }
      std::string out = "{";
      for (std::size_t i = 0; i < as.size(); ++i) {
        out += (i == 0 ? "" : ",") + G.label(as[i]);
      }
      return out + "}";
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FiniteGroupoid
  ////////////////////////////////////////////////////////////////////////

  FiniteGroupoid::FiniteGroupoid(std::vector<std::string> labels,
                                 std::vector<arrow_id>    source,
                                 std::vector<arrow_id>    range,
                                 std::vector<arrow_id>    compose,
                                 std::vector<arrow_id>    inverse)
      : _labels(std::move(labels)),
        _source(std::move(source)),
        _range(std::move(range)),
        _compose(std::move(compose)),
        _inverse(std::move(inverse)) {
    std::size_t const m = _labels.size();
    if (_source.size() != m || _range.size() != m || _inverse.size() != m
        || _compose.size() != m * m) {
      throw GroupoidAxiomError("groupoid data arrays have inconsistent sizes");
    }
    for (arrow_id a = 0; a < m; ++a) {
      if (_source[a] >= m || _range[a] >= m || _inverse[a] >= m) {
        axiom_failure("index out of range", a);
      }
    }
    for (arrow_id a = 0; a < m; ++a) {
      arrow_id const d = _source[a], r = _range[a];
      if (_source[d] != d || _range[d] != d || _source[r] != r || _range[r] != r) {
        axiom_failure("source and range must be units", a);
      }
    }
    std::vector<std::vector<arrow_id>> by_source(m), by_range(m);
    for (arrow_id a = 0; a < m; ++a) {
      by_source[_source[a]].push_back(a);
      by_range[_range[a]].push_back(a);
      for (arrow_id b = 0; b < m; ++b) {
        arrow_id const ab      = _compose[a * m + b];
        bool const     defined = _source[a] == _range[b];
        if (defined != (ab != undefined)) {
          axiom_failure("composition defined exactly on composable pairs", a, b);
        }
        if (defined) {
          if (ab >= m) {
            axiom_failure("composition out of range", a, b);
          }
          if (_source[ab] != _source[b] || _range[ab] != _range[a]) {
            axiom_failure("d(ab) = d(b) and r(ab) = r(a)", a, b);
          }
        }
      }
    }
    for (arrow_id a = 0; a < m; ++a) {
      if (this->compose(a, _source[a]) != a || this->compose(_range[a], a) != a) {
        axiom_failure("units are identities", a);
      }
      arrow_id const ai = _inverse[a];
      if (_source[ai] != _range[a] || _range[ai] != _source[a]
          || this->compose(ai, a) != _source[a] || this->compose(a, ai) != _range[a]) {
        axiom_failure("inverse", a);
      }
    }
    for (arrow_id b = 0; b < m; ++b) {
      for (arrow_id a : by_source[_range[b]]) {
        arrow_id const ab = this->compose(a, b);
        for (arrow_id c : by_range[_source[b]]) {
          if (this->compose(ab, c) != this->compose(a, this->compose(b, c))) {
            axiom_failure("associativity", a, b);
          }
        }
      }
    }
  }

  std::vector<arrow_id> FiniteGroupoid::units() const {
    std::vector<arrow_id> out;
    for (arrow_id a = 0; a < size(); ++a) {
      if (is_unit(a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  bool SubgroupoidSelection::contains(arrow_id a) const {
    return std::binary_search(members.begin(), members.end(), a);
  }

  SubgroupoidSelection make_selection(std::vector<arrow_id> arrows) {
    std::sort(arrows.begin(), arrows.end());
    arrows.erase(std::unique(arrows.begin(), arrows.end()), arrows.end());
    return SubgroupoidSelection{std::move(arrows)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Universal groupoid
  ////////////////////////////////////////////////////////////////////////

  bool germs_equal(FiniteInverseSemigroup const& S, Germ a, Germ b) {
    if (a.base != b.base) {
      return false;
    }
    Character const xi{a.base};
    for (element_id f : S.idempotents()) {
      if (evaluate(S, xi, f) == 1
          && S.product(a.element, f) == S.product(b.element, f)) {
        return true;
      }
    }
    return false;
  }

  arrow_id UniversalGroupoid::arrow_of(element_id s, element_id e) const {
    arrow_id a = index.at(s * n + e);
    GF_ASSERT(a != undefined, "germ requested outside the domain of s");
    return a;
  }

  UniversalGroupoid universal_groupoid(FiniteInverseSemigroup const& S) {
    std::size_t const n = S.size();
    UniversalGroupoid U;
    U.n = n;
    U.index.assign(n * n, undefined);
    U.unit_of.assign(n, undefined);

    // Classes of (s, e) under definitional germ equality; representatives
    // are grouped by base since germs with different bases never coincide.
    std::vector<std::vector<arrow_id>> by_base(n);
    for (element_id s = 0; s < n; ++s) {
      for (element_id e : S.idempotents()) {
        if (evaluate(S, Character{e}, S.domain_idempotent(s)) != 1) {
          continue;
        }
        Germ const g{s, e};
        arrow_id   found = undefined;
        for (arrow_id a : by_base[e]) {
          if (germs_equal(S, U.germs[a], g)) {
            found = a;
            break;
          }
        }
        if (found == undefined) {
          found = U.germs.size();
          U.germs.push_back(g);
          by_base[e].push_back(found);
        }
        U.index[s * n + e] = found;
      }
    }
    std::size_t const m = U.germs.size();
    for (auto& g : U.germs) {
      g.element = S.product(g.element, g.base);
    }
    // The canonical form (se, e) must separate exactly the germ classes.
    for (arrow_id a = 0; a < m; ++a) {
      GF_ASSERT(S.domain_idempotent(U.germs[a].element) == U.germs[a].base,
                "canonical germ representative has the wrong domain");
      for (arrow_id b = a + 1; b < m; ++b) {
        GF_ASSERT(!(U.germs[a] == U.germs[b]), "distinct germs share a canonical form");
      }
    }
    for (element_id e : S.idempotents()) {
      U.unit_of[e] = U.arrow_of(e, e);
    }

    std::vector<std::string> labels(m);
    std::vector<arrow_id>    source(m), range(m), inverse(m), compose(m * m, undefined);
    for (arrow_id a = 0; a < m; ++a) {
      auto const [s, e] = U.germs[a];
      labels[a]         = "[" + S.name(s) + "," + S.name(e) + "]";
      source[a]         = U.unit_of[e];
      element_id const moved = spectral_action(S, s, Character{e}).base;
      range[a]               = U.unit_of[moved];
      inverse[a]             = U.arrow_of(S.inverse(s), moved);
    }
    for (arrow_id a = 0; a < m; ++a) {
      for (arrow_id b = 0; b < m; ++b) {
        if (source[a] != range[b]) {
          continue;
        }
        // [s, beta_t(xi)] [t, xi] = [st, xi]
        compose[a * m + b]
            = U.arrow_of(S.product(U.germs[a].element, U.germs[b].element), U.germs[b].base);
      }
    }
    U.groupoid = FiniteGroupoid(std::move(labels),
                                std::move(source),
                                std::move(range),
                                std::move(compose),
                                std::move(inverse));
    return U;
  }

  FiniteGroupoid underlying_groupoid(FiniteInverseSemigroup const& S) {
    std::size_t const     n = S.size();
    std::vector<arrow_id> source(n), range(n), inverse(n), compose(n * n, undefined);
    for (element_id s = 0; s < n; ++s) {
      source[s]  = S.domain_idempotent(s);
      range[s]   = S.range_idempotent(s);
      inverse[s] = S.inverse(s);
      for (element_id t = 0; t < n; ++t) {
        if (S.domain_idempotent(s) == S.range_idempotent(t)) {
          compose[s * n + t] = S.product(s, t);
        }
      }
    }
    return FiniteGroupoid(S.names(), std::move(source), std::move(range),
                          std::move(compose), std::move(inverse));
  }

  FiniteGroupoid group_groupoid(FiniteInverseSemigroup const& S,
                                std::vector<element_id> const& members) {
    std::vector<element_id> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    std::size_t const m = sorted.size();
    auto              local = [&](element_id s) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), s);
      if (it == sorted.end() || *it != s) {
        throw Error("group_groupoid: members are not closed under the product");
      }
      return static_cast<arrow_id>(it - sorted.begin());
    };
    std::vector<element_id> idem;
    for (element_id s : sorted) {
      if (S.is_idempotent(s)) {
        idem.push_back(s);
      }
    }
    if (idem.size() != 1) {
      throw Error("group_groupoid: members must contain exactly one idempotent");
    }
    arrow_id const           unit = local(idem.front());
    std::vector<std::string> labels(m);
    std::vector<arrow_id>    compose(m * m), inverse(m);
    for (std::size_t i = 0; i < m; ++i) {
      labels[i]  = S.name(sorted[i]);
      inverse[i] = local(S.inverse(sorted[i]));
      for (std::size_t j = 0; j < m; ++j) {
        compose[i * m + j] = local(S.product(sorted[i], sorted[j]));
      }
    }
    return FiniteGroupoid(std::move(labels),
                          std::vector<arrow_id>(m, unit),
                          std::vector<arrow_id>(m, unit),
                          std::move(compose),
                          std::move(inverse));
  }

  FiniteGroupoid coproduct(std::vector<FiniteGroupoid> const& parts) {
    std::size_t total = 0;
    for (auto const& p : parts) {
      total += p.size();
    }
    std::vector<std::string> labels;
    std::vector<arrow_id>    source, range, inverse, compose(total * total, undefined);
    std::size_t              offset = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      auto const& P = parts[k];
      for (arrow_id a = 0; a < P.size(); ++a) {
        labels.push_back(std::to_string(k) + ":" + P.label(a));
        source.push_back(offset + P.source(a));
        range.push_back(offset + P.range(a));
        inverse.push_back(offset + P.inverse(a));
        for (arrow_id b = 0; b < P.size(); ++b) {
          arrow_id ab = P.compose(a, b);
          if (ab != undefined) {
            compose[(offset + a) * total + offset + b] = offset + ab;
          }
        }
      }
      offset += P.size();
    }
    return FiniteGroupoid(std::move(labels), std::move(source), std::move(range),
                          std::move(compose), std::move(inverse));
  }

  ////////////////////////////////////////////////////////////////////////
  // Subgroupoids and quotients
  ////////////////////////////////////////////////////////////////////////

  bool is_subgroupoid(FiniteGroupoid const& G, SubgroupoidSelection const& H) {
    for (arrow_id a : H.members) {
      if (a >= G.size() || !H.contains(G.inverse(a))) {
        return false;
      }
      for (arrow_id b : H.members) {
        arrow_id ab = G.compose(a, b);
        if (ab != undefined && !H.contains(ab)) {
          return false;
        }
      }
    }
    return true;
  }

  SubgroupoidSelection generated_subgroupoid(FiniteGroupoid const&        G,
                                             std::vector<arrow_id> const& generators) {
    std::vector<bool>     in(G.size(), false);
    std::vector<arrow_id> members;
    auto                  add = [&](arrow_id a) {
      if (!in[a]) {
        in[a] = true;
        members.push_back(a);
      }
    };
    for (arrow_id g : generators) {
      add(g);
      add(G.inverse(g));
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        arrow_id const a = members[i], b = members[j];
        if (arrow_id ab = G.compose(a, b); ab != undefined) {
          add(ab);
        }
        if (arrow_id ba = G.compose(b, a); ba != undefined) {
          add(ba);
        }
      }
    }
    return make_selection(std::move(members));
  }

  Restriction subgroupoid(FiniteGroupoid const& G, SubgroupoidSelection const& H) {
    if (!is_subgroupoid(G, H)) {
      throw NotASubgroupoid("subgroupoid: selection is not closed");
    }
    std::size_t const     m = H.members.size();
    std::vector<arrow_id> local(G.size(), undefined);
    for (std::size_t i = 0; i < m; ++i) {
      local[H.members[i]] = i;
    }
    std::vector<std::string> labels(m);
    std::vector<arrow_id>    source(m), range(m), inverse(m), compose(m * m, undefined);
    for (std::size_t i = 0; i < m; ++i) {
      arrow_id const a = H.members[i];
      labels[i]        = G.label(a);
      source[i]        = local[G.source(a)];
      range[i]         = local[G.range(a)];
      inverse[i]       = local[G.inverse(a)];
      for (std::size_t j = 0; j < m; ++j) {
        arrow_id ab = G.compose(a, H.members[j]);
        if (ab != undefined) {
          compose[i * m + j] = local[ab];
        }
      }
    }
    return Restriction{FiniteGroupoid(std::move(labels), std::move(source), std::move(range),
                                      std::move(compose), std::move(inverse)),
                       H.members};
  }

  bool is_invariant_set(FiniteGroupoid const& G, std::vector<arrow_id> const& units) {
    std::vector<bool> in(G.size(), false);
    for (arrow_id x : units) {
      if (x >= G.size() || !G.is_unit(x)) {
        return false;
      }
      in[x] = true;
    }
    for (arrow_id a = 0; a < G.size(); ++a) {
      if (in[G.source(a)] && !in[G.range(a)]) {
        return false;
      }
    }
    return true;
  }

  Restriction restrict(FiniteGroupoid const& G, std::vector<arrow_id> const& units) {
    if (!is_invariant_set(G, units)) {
      throw NotInvariantSet("restrict: unit set is not invariant");
    }
    std::vector<bool> in(G.size(), false);
    for (arrow_id x : units) {
      in[x] = true;
    }
    std::vector<arrow_id> members;
    for (arrow_id a = 0; a < G.size(); ++a) {
      if (in[G.source(a)]) {
        members.push_back(a);
      }
    }
    return subgroupoid(G, SubgroupoidSelection{std::move(members)});
  }

  bool is_normal_subgroupoid(FiniteGroupoid const& G, SubgroupoidSelection const& H) {
    if (!is_subgroupoid(G, H)) {
      throw NotASubgroupoid("is_normal_subgroupoid: selection is not a subgroupoid");
    }
    for (arrow_id x : G.units()) {
      if (!H.contains(x)) {
        return false;
      }
    }
    for (arrow_id h : H.members) {
      if (G.source(h) != G.range(h)) {
        return false;
      }
    }
    for (arrow_id a = 0; a < G.size(); ++a) {
      for (arrow_id h : H.members) {
        if (G.source(a) != G.range(h)) {
          continue;
        }
        arrow_id const c = G.compose(G.compose(a, h), G.inverse(a));
        if (!H.contains(c)) {
          return false;
        }
      }
    }
    return true;
  }

  GroupoidQuotient quotient_groupoid(FiniteGroupoid const& G, SubgroupoidSelection const& H) {
    if (!is_normal_subgroupoid(G, H)) {
      throw NotNormal("quotient_groupoid: subgroupoid is not normal");
    }
    std::size_t const     m = G.size();
    std::vector<arrow_id> cls(m, undefined);
    std::vector<std::vector<arrow_id>> members;
    for (arrow_id a = 0; a < m; ++a) {
      for (std::size_t k = 0; k < members.size(); ++k) {
        arrow_id const b = members[k].front();
        if (G.source(a) == G.source(b) && H.contains(G.compose(a, G.inverse(b)))) {
          cls[a] = k;
          break;
        }
      }
      if (cls[a] == undefined) {
        cls[a] = members.size();
        members.emplace_back();
      }
      members[cls[a]].push_back(a);
    }
    std::size_t const        q = members.size();
    std::vector<std::string> labels(q);
    std::vector<arrow_id>    source(q), range(q), inverse(q), compose(q * q, undefined);
    for (std::size_t k = 0; k < q; ++k) {
      arrow_id const a = members[k].front();
      labels[k]        = join_labels(G, members[k]);
      source[k]        = cls[G.source(a)];
      range[k]         = cls[G.range(a)];
      inverse[k]       = cls[G.inverse(a)];
    }
    for (arrow_id a = 0; a < m; ++a) {
      for (arrow_id b = 0; b < m; ++b) {
        arrow_id const ab = G.compose(a, b);
        if (ab == undefined) {
          continue;
        }
        arrow_id& slot = compose[cls[a] * q + cls[b]];
        GF_ASSERT(slot == undefined || slot == cls[ab], "quotient composition is not well defined");
        slot = cls[ab];
      }
    }
    GroupoidQuotient out{FiniteGroupoid(std::move(labels), std::move(source), std::move(range),
                                        std::move(compose), std::move(inverse)),
                         cls};
    GF_ASSERT(is_groupoid_hom(G, out.groupoid, out.projection), "projection is not a functor");
    return out;
  }

  bool is_groupoid_hom(FiniteGroupoid const&        G,
                       FiniteGroupoid const&        K,
                       std::vector<arrow_id> const& map) {
    if (map.size() != G.size()) {
      return false;
    }
    for (arrow_id a = 0; a < G.size(); ++a) {
      arrow_id const fa = map[a];
      if (fa >= K.size() || map[G.source(a)] != K.source(fa) || map[G.range(a)] != K.range(fa)
          || map[G.inverse(a)] != K.inverse(fa)) {
        return false;
      }
    }
    for (arrow_id a = 0; a < G.size(); ++a) {
      for (arrow_id b = 0; b < G.size(); ++b) {
        arrow_id const ab = G.compose(a, b);
        if (ab != undefined && map[ab] != K.compose(map[a], map[b])) {
          return false;
        }
      }
    }
    return true;
  }

  SubgroupoidSelection kernel_of_hom(FiniteGroupoid const&        G,
                                     FiniteGroupoid const&        K,
                                     std::vector<arrow_id> const& map) {
    if (!is_groupoid_hom(G, K, map)) {
      throw Error("kernel_of_hom: map is not a groupoid homomorphism");
    }
    auto const units = G.units();
    for (std::size_t i = 0; i < units.size(); ++i) {
      for (std::size_t j = i + 1; j < units.size(); ++j) {
        if (map[units[i]] == map[units[j]]) {
          throw NotInjectiveOnUnits("kernel_of_hom: units " + G.label(units[i]) + " and "
                                    + G.label(units[j]) + " have the same image");
        }
      }
    }
    std::vector<arrow_id> members;
    for (arrow_id a = 0; a < G.size(); ++a) {
      if (K.is_unit(map[a])) {
        members.push_back(a);
      }
    }
    SubgroupoidSelection ker{std::move(members)};
    GF_ASSERT(is_normal_subgroupoid(G, ker), "kernel is not a normal subgroupoid");
    // Homomorphism theorem: the induced map on G/ker is injective.
    for (arrow_id a = 0; a < G.size(); ++a) {
      for (arrow_id b = 0; b < G.size(); ++b) {
        if (map[a] == map[b]) {
          GF_ASSERT(G.source(a) == G.source(b) && ker.contains(G.compose(a, G.inverse(b))),
                    "induced map on the quotient is not injective");
        }
      }
    }
    return ker;
  }

  ////////////////////////////////////////////////////////////////////////
  // Isotropy
  ////////////////////////////////////////////////////////////////////////

  std::vector<arrow_id> fixed_units(FiniteGroupoid const& G) {
    std::vector<bool> moved(G.size(), false);
    for (arrow_id a = 0; a < G.size(); ++a) {
      if (G.source(a) != G.range(a)) {
        moved[G.source(a)] = true;
      }
    }
    std::vector<arrow_id> out;
    for (arrow_id x : G.units()) {
      if (!moved[x]) {
        out.push_back(x);
      }
    }
    return out;
  }

  SubgroupoidSelection iso_bundle(FiniteGroupoid const& G) {
    std::vector<arrow_id> members;
    for (arrow_id a = 0; a < G.size(); ++a) {
      if (G.source(a) == G.range(a)) {
        members.push_back(a);
      }
    }
    return SubgroupoidSelection{std::move(members)};
  }

  bool is_group_bundle(FiniteGroupoid const& G) {
    return iso_bundle(G).members.size() == G.size();
  }

  Restriction g_fix(FiniteGroupoid const& G) {
    Restriction r = restrict(G, fixed_units(G));
    GF_ASSERT(is_group_bundle(r.groupoid), "G_fix is not a group bundle");
    return r;
  }

  Restriction isotropy_group(FiniteGroupoid const& G, arrow_id unit) {
    if (!G.is_unit(unit)) {
      throw Error("isotropy_group: not a unit");
    }
    std::vector<arrow_id> members;
    for (arrow_id a = 0; a < G.size(); ++a) {
      if (G.source(a) == unit && G.range(a) == unit) {
        members.push_back(a);
      }
    }
    return subgroupoid(G, SubgroupoidSelection{std::move(members)});
  }

  SubgroupoidSelection commutator_bundle(FiniteGroupoid const& G) {
    if (!is_group_bundle(G)) {
      throw NotGroupBundle("commutator_bundle: groupoid is not a group bundle");
    }
    std::map<arrow_id, std::vector<arrow_id>> fibre;
    for (arrow_id a = 0; a < G.size(); ++a) {
      fibre[G.source(a)].push_back(a);
    }
    std::vector<arrow_id> generators;
    for (auto const& [x, arrows] : fibre) {
      generators.push_back(x);
      for (arrow_id a : arrows) {
        for (arrow_id b : arrows) {
          generators.push_back(
              G.compose(G.compose(a, b), G.compose(G.inverse(a), G.inverse(b))));
        }
      }
    }
    return generated_subgroupoid(G, generators);
  }

  bool is_abelian_bundle(FiniteGroupoid const& G) {
    for (arrow_id a = 0; a < G.size(); ++a) {
      for (arrow_id b = 0; b < G.size(); ++b) {
        if (G.source(a) == G.range(a) && G.source(b) == G.range(b)
            && G.source(a) == G.source(b) && G.compose(a, b) != G.compose(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  FiniteGroupoid abelianize(FiniteGroupoid const& G) {
    Restriction const fix = g_fix(G);
    GroupoidQuotient  q   = quotient_groupoid(fix.groupoid, commutator_bundle(fix.groupoid));
    GF_ASSERT(is_abelian_bundle(q.groupoid), "abelianisation has non-abelian isotropy");
    return std::move(q.groupoid);
  }

  std::vector<std::vector<arrow_id>> orbits(FiniteGroupoid const& G) {
    std::vector<arrow_id> root(G.size());
    std::iota(root.begin(), root.end(), 0);
    std::function<arrow_id(arrow_id)> find = [&](arrow_id x) {
      return root[x] == x ? x : root[x] = find(root[x]);
    };
    for (arrow_id a = 0; a < G.size(); ++a) {
      arrow_id const u = find(G.source(a)), v = find(G.range(a));
      root[std::max(u, v)] = std::min(u, v);
    }
    std::map<arrow_id, std::vector<arrow_id>> comp;
    for (arrow_id a = 0; a < G.size(); ++a) {
      comp[find(G.source(a))].push_back(a);
    }
    std::vector<std::vector<arrow_id>> out;
    for (auto& [k, v] : comp) {
      out.push_back(std::move(v));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism search
  ////////////////////////////////////////////////////////////////////////

  std::size_t search_budget_from_env() {
    if (char const* v = std::getenv("GF_BUDGET")) {
      try {
        return static_cast<std::size_t>(std::stoull(v));
      } catch (std::exception const&) {
        throw Error(std::string("GF_BUDGET is not a number: ") + v);
      }
    }
    return default_search_budget;
  }

  namespace {
    std::size_t element_order(FiniteGroupoid const& G, arrow_id a) {
      arrow_id    p = a;
      std::size_t k = 1;
      while (!G.is_unit(p)) {
        p = G.compose(p, a);
        ++k;
      }
      return k;
    }

    // One connected component: a base unit, a spanning arrow base -> y for
    // each unit y, and the isotropy group at the base.
    struct Component {
      std::vector<arrow_id> units;
      std::vector<arrow_id> span;
      std::vector<arrow_id> group;
      std::vector<std::size_t> order_profile;
      std::size_t exponent = 1;

      auto signature() const {
        return std::make_tuple(units.size(), group.size(), exponent, order_profile);
      }
    };

    std::vector<Component> components(FiniteGroupoid const& G) {
      std::vector<Component> out;
      for (auto const& arrows : orbits(G)) {
        Component c;
        for (arrow_id a : arrows) {
          if (G.is_unit(a)) {
            c.units.push_back(a);
          }
        }
        arrow_id const base = c.units.front();
        for (arrow_id y : c.units) {
          arrow_id t = undefined;
          for (arrow_id a : arrows) {
            if (G.source(a) == base && G.range(a) == y) {
              t = a;
              break;
            }
          }
          c.span.push_back(t);
        }
        for (arrow_id a : arrows) {
          if (G.source(a) == base && G.range(a) == base) {
            c.group.push_back(a);
            std::size_t const o = element_order(G, a);
            c.order_profile.push_back(o);
            c.exponent = std::lcm(c.exponent, o);
          }
        }
        std::sort(c.order_profile.begin(), c.order_profile.end());
        out.push_back(std::move(c));
      }
      return out;
    }

    struct LocalGroup {
      std::vector<std::size_t> table;  // k x k
      std::vector<std::size_t> order;
      std::size_t              identity = 0;
      std::size_t              size() const {
        return order.size();
      }
      std::size_t mul(std::size_t a, std::size_t b) const {
        return table[a * size() + b];
      }
    };

    LocalGroup local_group(FiniteGroupoid const& G, std::vector<arrow_id> const& arrows) {
      LocalGroup L;
      std::size_t const k = arrows.size();
      std::map<arrow_id, std::size_t> idx;
      for (std::size_t i = 0; i < k; ++i) {
        idx[arrows[i]] = i;
      }
      L.table.resize(k * k);
      L.order.resize(k);
      for (std::size_t i = 0; i < k; ++i) {
        if (G.is_unit(arrows[i])) {
          L.identity = i;
        }
        L.order[i] = element_order(G, arrows[i]);
        for (std::size_t j = 0; j < k; ++j) {
          L.table[i * k + j] = idx.at(G.compose(arrows[i], arrows[j]));
        }
      }
      return L;
    }

    class GroupIsoSearch {
     public:
      GroupIsoSearch(LocalGroup const& A, LocalGroup const& B, std::size_t& nodes, std::size_t budget)
          : _A(A), _B(B), _nodes(nodes), _budget(budget) {}

      std::optional<std::vector<std::size_t>> run() {
        if (_A.size() != _B.size()) {
          return std::nullopt;
        }
        choose_generators();
        _image.assign(_gens.size(), undefined);
        _map.assign(_A.size(), undefined);
        _map[_A.identity] = _B.identity;
        if (extend(0)) {
          return _map;
        }
        return std::nullopt;
      }

     private:
      void choose_generators() {
        std::vector<std::size_t> by_order(_A.size());
        std::iota(by_order.begin(), by_order.end(), 0);
        std::stable_sort(by_order.begin(), by_order.end(), [&](std::size_t a, std::size_t b) {
          return _A.order[a] > _A.order[b];
        });
        std::vector<bool> in(_A.size(), false);
        in[_A.identity] = true;
        for (std::size_t g : by_order) {
          if (in[g]) {
            continue;
          }
          _gens.push_back(g);
          // Regenerate the subgroup.
          std::fill(in.begin(), in.end(), false);
          std::vector<std::size_t> members{_A.identity};
          in[_A.identity] = true;
          for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t h : _gens) {
              std::size_t p = _A.mul(members[i], h);
              if (!in[p]) {
                in[p] = true;
                members.push_back(p);
              }
            }
          }
        }
      }

      // Defines the map on the subgroup generated by the first level+1
      // generators; fails on an inconsistency or a collision.
      bool consistent(std::size_t level) {
        _map.assign(_A.size(), undefined);
        std::vector<bool> used(_B.size(), false);
        _map[_A.identity]  = _B.identity;
        used[_B.identity]  = true;
        std::vector<std::size_t> queue{_A.identity};
        for (std::size_t i = 0; i < queue.size(); ++i) {
          std::size_t const a = queue[i];
          for (std::size_t j = 0; j <= level; ++j) {
            std::size_t const next  = _A.mul(a, _gens[j]);
            std::size_t const image = _B.mul(_map[a], _image[j]);
            if (_map[next] == undefined) {
              if (used[image]) {
                return false;
              }
              used[image] = true;
              _map[next]  = image;
              queue.push_back(next);
            } else if (_map[next] != image) {
              return false;
            }
          }
        }
        return true;
      }

      bool extend(std::size_t level) {
        if (level == _gens.size()) {
          return std::find(_map.begin(), _map.end(), undefined) == _map.end();
        }
        for (std::size_t b = 0; b < _B.size(); ++b) {
          if (_B.order[b] != _A.order[_gens[level]]) {
            continue;
          }
          if (++_nodes > _budget) {
            throw SearchBudgetExceeded("isomorphism search exceeded "
                                       + std::to_string(_budget) + " nodes");
          }
          _image[level] = b;
          if (consistent(level) && extend(level + 1)) {
            return true;
          }
        }
        return false;
      }

      LocalGroup const&        _A;
      LocalGroup const&        _B;
      std::size_t&             _nodes;
      std::size_t              _budget;
      std::vector<std::size_t> _gens;
      std::vector<std::size_t> _image;
      std::vector<std::size_t> _map;
    };

    template <typename T>
    std::string describe(T const& values) {
      std::ostringstream os;
      os << "[";
      for (std::size_t i = 0; i < values.size(); ++i) {
        os << (i == 0 ? "" : ",") << values[i];
      }
      os << "]";
      return os.str();
    }

    std::optional<std::string> invariant_mismatch(FiniteGroupoid const&         G1,
                                                  FiniteGroupoid const&         G2,
                                                  std::vector<Component> const& c1,
                                                  std::vector<Component> const& c2) {
      if (G1.size() != G2.size()) {
        return "arrow count " + std::to_string(G1.size()) + " vs " + std::to_string(G2.size());
      }
      if (G1.units().size() != G2.units().size()) {
        return "unit count " + std::to_string(G1.units().size()) + " vs "
               + std::to_string(G2.units().size());
      }
      auto project = [](std::vector<Component> const& cs, auto f) {
        std::vector<std::size_t> v;
        for (auto const& c : cs) {
          v.push_back(f(c));
        }
        std::sort(v.begin(), v.end());
        return v;
      };
      auto orbit_size = [](Component const& c) { return c.units.size(); };
      auto iso_order  = [](Component const& c) { return c.group.size(); };
      auto exponent   = [](Component const& c) { return c.exponent; };
      if (auto a = project(c1, orbit_size), b = project(c2, orbit_size); a != b) {
        return "orbit sizes " + describe(a) + " vs " + describe(b);
      }
      if (auto a = project(c1, iso_order), b = project(c2, iso_order); a != b) {
        return "isotropy orders " + describe(a) + " vs " + describe(b);
      }
      if (auto a = project(c1, exponent), b = project(c2, exponent); a != b) {
        return "isotropy exponents " + describe(a) + " vs " + describe(b);
      }
      std::vector<decltype(c1.front().signature())> s1, s2;
      for (auto const& c : c1) {
        s1.push_back(c.signature());
      }
      for (auto const& c : c2) {
        s2.push_back(c.signature());
      }
      std::sort(s1.begin(), s1.end());
      std::sort(s2.begin(), s2.end());
      if (s1 != s2) {
        return std::string("isotropy element-order profiles differ");
      }
      return std::nullopt;
    }
  }  // namespace

  std::size_t group_exponent(FiniteGroupoid const& G) {
    std::size_t e = 1;
    for (arrow_id a = 0; a < G.size(); ++a) {
      e = std::lcm(e, element_order(G, a));
    }
    return e;
  }

  IsomorphismResult are_isomorphic(FiniteGroupoid const& G1,
                                   FiniteGroupoid const& G2,
                                   std::size_t           budget) {
    IsomorphismResult result;
    auto const        c1 = components(G1);
    auto const        c2 = components(G2);
    if (auto why = invariant_mismatch(G1, G2, c1, c2)) {
      result.refutation = *why;
      return result;
    }
    std::vector<arrow_id> map(G1.size(), undefined);
    std::vector<bool>     used(c2.size(), false);
    for (auto const& a : c1) {
      LocalGroup const A = local_group(G1, a.group);
      bool             matched = false;
      for (std::size_t j = 0; j < c2.size() && !matched; ++j) {
        auto const& b = c2[j];
        if (used[j] || a.signature() != b.signature()) {
          continue;
        }
        LocalGroup const B   = local_group(G2, b.group);
        auto             phi = GroupIsoSearch(A, B, result.nodes, budget).run();
        if (!phi) {
          continue;
        }
        used[j] = true;
        matched = true;
        std::map<arrow_id, std::size_t> unit_index;
        for (std::size_t i = 0; i < a.units.size(); ++i) {
          unit_index[a.units[i]] = i;
        }
        std::map<arrow_id, std::size_t> local_a;
        for (std::size_t i = 0; i < a.group.size(); ++i) {
          local_a[a.group[i]] = i;
        }
        // alpha : y -> z  maps to  t'_z phi(t_z^{-1} alpha t_y) t'_y^{-1}
        for (arrow_id alpha = 0; alpha < G1.size(); ++alpha) {
          auto yi = unit_index.find(G1.source(alpha));
          if (yi == unit_index.end()) {
            continue;
          }
          std::size_t const y = yi->second, z = unit_index.at(G1.range(alpha));
          arrow_id const    h = G1.compose(G1.compose(G1.inverse(a.span[z]), alpha), a.span[y]);
          arrow_id const    ph = b.group[(*phi)[local_a.at(h)]];
          map[alpha] = G2.compose(G2.compose(b.span[z], ph), G2.inverse(b.span[y]));
        }
      }
      if (!matched) {
        result.refutation = "no component of the second groupoid has isotropy isomorphic to "
                            "the component at " + G1.label(a.units.front());
        return result;
      }
    }
    GF_ASSERT(verify_isomorphism(G1, G2, map), "constructed isomorphism does not replay");
    result.certificate = std::move(map);
    return result;
  }

  bool verify_isomorphism(FiniteGroupoid const&        G1,
                          FiniteGroupoid const&        G2,
                          std::vector<arrow_id> const& map) {
    if (G1.size() != G2.size() || map.size() != G1.size()) {
      return false;
    }
    std::vector<bool> hit(G2.size(), false);
    for (arrow_id a : map) {
      if (a >= G2.size() || hit[a]) {
        return false;
      }
      hit[a] = true;
    }
    for (arrow_id a = 0; a < G1.size(); ++a) {
      if (G1.is_unit(a) != G2.is_unit(map[a])) {
        return false;
      }
      for (arrow_id b = 0; b < G1.size(); ++b) {
        arrow_id const ab = G1.compose(a, b);
        arrow_id const fab = G2.compose(map[a], map[b]);
        if ((ab == undefined) != (fab == undefined)) {
          return false;
        }
        if (ab != undefined && map[ab] != fab) {
          return false;
        }
      }
    }
    return is_groupoid_hom(G1, G2, map);
  }

}  // namespace gf
