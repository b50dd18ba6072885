#include "gf/congruence.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "gf/spectrum.hpp"

namespace gf {

  namespace {
    std::vector<std::size_t> canonical_labels(std::vector<std::size_t> const& labels) {
      std::map<std::size_t, std::size_t> first;
      std::vector<std::size_t>           out(labels.size());
      for (std::size_t i = 0; i < labels.size(); ++i) {
        out[i] = first.emplace(labels[i], i).first->second;
      }
      return out;
    }

    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), 0);
      }
      std::size_t find(std::size_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }
      bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        _parent[std::max(a, b)] = std::min(a, b);
        return true;
      }

     private:
      std::vector<std::size_t> _parent;
    };
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Congruence
  ////////////////////////////////////////////////////////////////////////

  Congruence::Congruence(std::vector<std::size_t> const& labels)
      : _class_of(canonical_labels(labels)) {}

  Congruence Congruence::identity(std::size_t n) {
    std::vector<std::size_t> l(n);
    std::iota(l.begin(), l.end(), 0);
    return Congruence(l);
  }

  Congruence Congruence::full(std::size_t n) {
    return Congruence(std::vector<std::size_t>(n, 0));
  }

  std::size_t Congruence::number_of_classes() const {
    std::size_t k = 0;
    for (std::size_t i = 0; i < size(); ++i) {
      k += (_class_of[i] == i);
    }
    return k;
  }

  std::vector<std::vector<element_id>> Congruence::classes() const {
    std::map<std::size_t, std::vector<element_id>> m;
    for (std::size_t i = 0; i < size(); ++i) {
      m[_class_of[i]].push_back(i);
    }
    std::vector<std::vector<element_id>> out;
    for (auto& [k, v] : m) {
      out.push_back(std::move(v));
    }
    return out;
  }

  bool Congruence::refines(Congruence const& other) const {
    if (other.size() != size()) {
      return false;
    }
    for (std::size_t i = 0; i < size(); ++i) {
      if (!other.related(i, _class_of[i])) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // IdempotentCongruence
  ////////////////////////////////////////////////////////////////////////

  IdempotentCongruence::IdempotentCongruence(FiniteInverseSemigroup const&   S,
                                             std::vector<std::size_t> const& labels)
      : _class_of(S.size(), undefined) {
    if (labels.size() != S.size()) {
      throw Error("IdempotentCongruence: label array has wrong length");
    }
    std::map<std::size_t, std::size_t> first;
    for (element_id e : S.idempotents()) {
      _class_of[e] = first.emplace(labels[e], e).first->second;
    }
  }

  IdempotentCongruence IdempotentCongruence::identity(FiniteInverseSemigroup const& S) {
    std::vector<std::size_t> l(S.size());
    std::iota(l.begin(), l.end(), 0);
    return IdempotentCongruence(S, l);
  }

  IdempotentCongruence IdempotentCongruence::full(FiniteInverseSemigroup const& S) {
    return IdempotentCongruence(S, std::vector<std::size_t>(S.size(), 0));
  }

  std::size_t IdempotentCongruence::class_of(element_id e) const {
    std::size_t c = _class_of.at(e);
    if (c == undefined) {
      throw NotIdempotent("IdempotentCongruence: element is not idempotent");
    }
    return c;
  }

  std::size_t IdempotentCongruence::number_of_classes() const {
    std::size_t k = 0;
    for (std::size_t i = 0; i < _class_of.size(); ++i) {
      k += (_class_of[i] == i);
    }
    return k;
  }

  ////////////////////////////////////////////////////////////////////////
  // Checks and closure
  ////////////////////////////////////////////////////////////////////////

  bool is_congruence(FiniteInverseSemigroup const& S, Congruence const& c) {
    if (c.size() != S.size()) {
      return false;
    }
    for (element_id s = 0; s < S.size(); ++s) {
      element_id const t = c.class_of(s);
      if (t == s) {
        continue;
      }
      for (element_id a = 0; a < S.size(); ++a) {
        if (!c.related(S.product(a, s), S.product(a, t))
            || !c.related(S.product(s, a), S.product(t, a))) {
          return false;
        }
      }
    }
    return true;
  }

  Congruence close(FiniteInverseSemigroup const& S, PairList const& pairs) {
    std::size_t const n = S.size();
    UnionFind         uf(n);
    std::deque<std::pair<element_id, element_id>> work(pairs.begin(), pairs.end());
    while (!work.empty()) {
      auto [s, t] = work.front();
      work.pop_front();
      if (s >= n || t >= n) {
        throw std::out_of_range("close: element id out of range");
      }
      if (!uf.unite(s, t)) {
        continue;
      }
      for (element_id a = 0; a < n; ++a) {
        work.emplace_back(S.product(a, s), S.product(a, t));
        work.emplace_back(S.product(s, a), S.product(t, a));
      }
    }
    std::vector<std::size_t> labels(n);
    for (element_id s = 0; s < n; ++s) {
      labels[s] = uf.find(s);
    }
    return Congruence(labels);
  }

  bool is_congruence_on_idempotents(FiniteInverseSemigroup const& S,
                                    IdempotentCongruence const&   rho) {
    for (element_id e : S.idempotents()) {
      element_id const f = rho.class_of(e);
      for (element_id g : S.idempotents()) {
        if (!rho.related(S.product(e, g), S.product(f, g))) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_normal_on_idempotents(FiniteInverseSemigroup const& S,
                                IdempotentCongruence const&   rho) {
    if (!is_congruence_on_idempotents(S, rho)) {
      return false;
    }
    for (element_id e : S.idempotents()) {
      element_id const f = rho.class_of(e);
      for (element_id s = 0; s < S.size(); ++s) {
        element_id const si = S.inverse(s);
        if (!rho.related(S.product({s, e, si}), S.product({s, f, si}))) {
          return false;
        }
      }
    }
    return true;
  }

  IdempotentCongruence restrict_to_idempotents(FiniteInverseSemigroup const& S,
                                               Congruence const&             nu) {
    return IdempotentCongruence(S, nu.labels());
  }

  Congruence nu_min(FiniteInverseSemigroup const& S, IdempotentCongruence const& rho) {
    if (!is_normal_on_idempotents(S, rho)) {
      throw NotNormal("nu_min: congruence on E(S) is not normal");
    }
    std::size_t const n = S.size();
    auto related = [&](element_id s, element_id t) {
      element_id const ss = S.domain_idempotent(s);
      if (!rho.related(ss, S.domain_idempotent(t))) {
        return false;
      }
      for (element_id e : S.idempotents()) {
        if (rho.related(e, ss) && S.product(s, e) == S.product(t, e)) {
          return true;
        }
      }
      return false;
    };
    std::vector<std::size_t> labels(n);
    for (element_id s = 0; s < n; ++s) {
      labels[s] = s;
      for (element_id t = 0; t < s; ++t) {
        if (related(s, t)) {
          labels[s] = labels[t];
          break;
        }
      }
    }
    Congruence result(labels);
    for (element_id s = 0; s < n; ++s) {
      for (element_id t = 0; t < n; ++t) {
        GF_ASSERT(related(s, t) == result.related(s, t),
                  "nu_min relation is not an equivalence");
      }
    }
    GF_ASSERT(is_congruence(S, result), "nu_min result is not a congruence");
    GF_ASSERT(restrict_to_idempotents(S, result) == rho,
              "nu_min does not restrict to rho");
    return result;
  }

  Quotient quotient(FiniteInverseSemigroup const& S, Congruence const& nu) {
    GF_ASSERT(nu.size() == S.size(), "quotient: size mismatch");
    auto const               classes = nu.classes();
    std::vector<std::size_t> index(S.size());
    for (std::size_t k = 0; k < classes.size(); ++k) {
      for (element_id s : classes[k]) {
        index[s] = k;
      }
    }
    std::size_t const                    m = classes.size();
    std::vector<std::vector<element_id>> table(m, std::vector<element_id>(m));
    std::vector<element_id>              inverse(m);
    std::vector<std::string>             names(m);
    for (std::size_t a = 0; a < m; ++a) {
      element_id const ra = classes[a].front();
      inverse[a]          = index[S.inverse(ra)];
      names[a]            = "{";
      for (std::size_t i = 0; i < classes[a].size(); ++i) {
        names[a] += (i == 0 ? "" : ",") + S.name(classes[a][i]);
      }
      names[a] += "}";
      for (std::size_t b = 0; b < m; ++b) {
        table[a][b] = index[S.product(ra, classes[b].front())];
      }
    }
    Quotient q{FiniteInverseSemigroup(std::move(names), std::move(table), std::move(inverse)),
               SemigroupHom{index}};
    GF_ASSERT(check_hom(S, q.semigroup, q.map), "quotient map is not a homomorphism");
    return q;
  }

  bool is_normal_subsemigroup(FiniteInverseSemigroup const& S,
                              std::vector<element_id> const& members) {
    std::vector<bool> in(S.size(), false);
    for (element_id s : members) {
      in.at(s) = true;
    }
    for (element_id e : S.idempotents()) {
      if (!in[e]) {
        return false;
      }
    }
    for (element_id a : members) {
      if (!in[S.inverse(a)]) {
        return false;
      }
      for (element_id b : members) {
        if (!in[S.product(a, b)]) {
          return false;
        }
      }
      for (element_id s = 0; s < S.size(); ++s) {
        if (!in[S.product({s, a, S.inverse(s)})]) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<element_id> kernel(FiniteInverseSemigroup const& S, Congruence const& nu) {
    std::vector<element_id> out;
    for (element_id s = 0; s < S.size(); ++s) {
      if (nu.related(S.product(s, s), s)) {
        out.push_back(s);
      }
    }
    GF_ASSERT(is_normal_subsemigroup(S, out), "kernel is not a normal subsemigroup");
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Least Clifford and commutative congruences
  ////////////////////////////////////////////////////////////////////////

  Congruence least_clifford(FiniteInverseSemigroup const& S) {
    IdempotentCongruence const rho    = rho_from_set(S, fixed_characters(S));
    Congruence                 result = nu_min(S, rho);
    GF_ASSERT(is_clifford(quotient(S, result).semigroup),
              "least_clifford quotient is not Clifford");
    return result;
  }

  Congruence least_clifford_oracle(FiniteInverseSemigroup const& S) {
    PairList pairs;
    for (element_id s = 0; s < S.size(); ++s) {
      pairs.emplace_back(S.domain_idempotent(s), S.range_idempotent(s));
    }
    return close(S, pairs);
  }

  Congruence least_commutative(FiniteInverseSemigroup const& S) {
    PairList pairs;
    for (element_id s = 0; s < S.size(); ++s) {
      for (element_id t = s + 1; t < S.size(); ++t) {
        pairs.emplace_back(S.product(s, t), S.product(t, s));
      }
    }
    Congruence result = close(S, pairs);
    GF_ASSERT(is_commutative(quotient(S, result).semigroup),
              "least_commutative quotient is not commutative");
    return result;
  }

  Congruence nu_ab_oracle(FiniteInverseSemigroup const& S, std::size_t max_order) {
    constexpr int zero = -1;

    std::vector<element_id> const gens  = generating_set(S);
    auto const                    words = factorisations(S, gens);
    std::size_t const             n     = S.size();

    // An element is determined once every generator in its word is assigned.
    std::vector<std::size_t> depth(n, 0);
    for (element_id s = 0; s < n; ++s) {
      depth[s] = *std::max_element(words[s].begin(), words[s].end());
    }
    std::vector<std::vector<element_id>> ready(gens.size());
    for (element_id s = 0; s < n; ++s) {
      ready[depth[s]].push_back(s);
    }

    std::vector<std::size_t> partition(n, 0);
    std::vector<int>         image(gens.size(), zero);
    std::vector<int>         value(n, zero);

    for (std::size_t k = 1; k <= max_order; ++k) {
      auto mult = [k](int a, int b) {
        return (a == zero || b == zero) ? zero : static_cast<int>((a + b) % k);
      };
      auto consistent_up_to = [&](std::size_t level) {
        for (element_id s : ready[level]) {
          int v = image[words[s].front()];
          for (std::size_t i = 1; i < words[s].size(); ++i) {
            v = mult(v, image[words[s][i]]);
          }
          value[s] = v;
        }
        for (element_id s = 0; s < n; ++s) {
          if (depth[s] > level) {
            continue;
          }
          for (element_id t = 0; t < n; ++t) {
            element_id const st = S.product(s, t);
            if (depth[t] > level || depth[st] > level) {
              continue;
            }
            if (depth[s] != level && depth[t] != level && depth[st] != level) {
              continue;
            }
            if (value[st] != mult(value[s], value[t])) {
              return false;
            }
          }
        }
        return true;
      };
      std::function<void(std::size_t)> assign = [&](std::size_t level) {
        if (level == gens.size()) {
          std::vector<std::size_t> refined(n);
          std::map<std::pair<std::size_t, int>, std::size_t> ids;
          for (element_id s = 0; s < n; ++s) {
            refined[s] = ids.emplace(std::make_pair(partition[s], value[s]), ids.size())
                             .first->second;
          }
          partition = std::move(refined);
          return;
        }
        for (int v = zero; v < static_cast<int>(k); ++v) {
          image[level] = v;
          if (consistent_up_to(level)) {
            assign(level + 1);
          }
        }
      };
      assign(0);
    }
    return Congruence(partition);
  }

  Quotient maximal_group_image(FiniteInverseSemigroup const& S) {
    Quotient q = quotient(S, nu_min(S, IdempotentCongruence::full(S)));
    GF_ASSERT(is_group(q.semigroup), "maximal group image is not a group");
    return q;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  std::vector<Congruence> all_congruences(FiniteInverseSemigroup const& S) {
    std::size_t const n = S.size();
    auto              as_pairs = [](Congruence const& c) {
      PairList p;
      for (element_id s = 0; s < c.size(); ++s) {
        if (c.class_of(s) != s) {
          p.emplace_back(s, c.class_of(s));
        }
      }
      return p;
    };
    std::vector<Congruence> principal;
    for (element_id s = 0; s < n; ++s) {
      for (element_id t = s + 1; t < n; ++t) {
        principal.push_back(close(S, {{s, t}}));
      }
    }
    std::set<std::vector<std::size_t>> seen;
    std::vector<Congruence>            found{Congruence::identity(n)};
    seen.insert(found.front().labels());
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (auto const& p : principal) {
        if (p.refines(found[i])) {
          continue;
        }
        PairList pairs = as_pairs(found[i]);
        auto     extra = as_pairs(p);
        pairs.insert(pairs.end(), extra.begin(), extra.end());
        Congruence j = close(S, pairs);
        if (seen.insert(j.labels()).second) {
          found.push_back(std::move(j));
        }
      }
    }
    std::sort(found.begin(), found.end(), [](Congruence const& a, Congruence const& b) {
      return a.labels() < b.labels();
    });
    return found;
  }

  std::vector<IdempotentCongruence>
  normal_idempotent_congruences(FiniteInverseSemigroup const& S,
                                std::size_t                   max_idempotents) {
    auto const&       E = S.idempotents();
    std::size_t const m = E.size();
    if (m > max_idempotents) {
      throw SearchBudgetExceeded("normal_idempotent_congruences: |E(S)| = "
                                 + std::to_string(m) + " exceeds "
                                 + std::to_string(max_idempotents));
    }
    std::vector<IdempotentCongruence> out;
    // Restricted growth strings enumerate set partitions of E(S).
    std::vector<std::size_t>          rgs(m, 0);
    std::vector<std::size_t>          labels(S.size(), 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                            std::size_t blocks) {
      if (i == m) {
        for (std::size_t j = 0; j < m; ++j) {
          labels[E[j]] = rgs[j];
        }
        IdempotentCongruence rho(S, labels);
        if (is_normal_on_idempotents(S, rho)) {
          out.push_back(std::move(rho));
        }
        return;
      }
      for (std::size_t b = 0; b <= blocks; ++b) {
        rgs[i] = b;
        rec(i + 1, std::max(blocks, b + 1));
      }
    };
    if (m > 0) {
      rgs[0] = 0;
      rec(1, 1);
    }
    return out;
  }

}  // namespace gf
