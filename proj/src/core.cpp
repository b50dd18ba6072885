#include "gf/core.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_set>

namespace gf {

  std::string ValidationReport::message() const {
    std::ostringstream os;
    switch (axiom) {
      case Axiom::shape:
        os << "malformed table";
        break;
      case Axiom::associativity:
        os << "NonAssociative";
        break;
      case Axiom::inverse:
        os << "BadInverse";
        break;
      case Axiom::idempotents_commute:
        os << "NoncommutingIdempotents";
        break;
    }
    if (!witness.empty()) {
      os << "(";
      for (std::size_t i = 0; i < witness.size(); ++i) {
        os << (i == 0 ? "" : ", ") << witness[i];
      }
      os << ")";
    }
    if (!detail.empty()) {
      os << ": " << detail;
    }
    return os.str();
  }

  ValidationError::ValidationError(ValidationReport report)
      : Error(report.message()), _report(std::move(report)) {}

  namespace {
    std::optional<ValidationReport>
    check_shape(std::vector<std::vector<element_id>> const& table,
                std::optional<std::vector<element_id>> const& inverse) {
      std::size_t const n = table.size();
      if (n == 0) {
        return ValidationReport{Axiom::shape, {}, "empty table"};
      }
      for (std::size_t s = 0; s < n; ++s) {
        if (table[s].size() != n) {
          return ValidationReport{Axiom::shape, {s}, "row has wrong length"};
        }
        for (std::size_t t = 0; t < n; ++t) {
          if (table[s][t] >= n) {
            return ValidationReport{Axiom::shape, {s, t}, "entry out of range"};
          }
        }
      }
      if (inverse && inverse->size() != n) {
        return ValidationReport{Axiom::shape, {}, "inverse has wrong length"};
      }
      if (inverse) {
        for (std::size_t s = 0; s < n; ++s) {
          if ((*inverse)[s] >= n) {
            return ValidationReport{Axiom::shape, {s}, "inverse out of range"};
          }
        }
      }
      return std::nullopt;
    }

    // Either checks the supplied inverses or searches for one per element.
    std::optional<ValidationReport>
    resolve_inverses(std::vector<std::vector<element_id>> const& table,
                     std::optional<std::vector<element_id>> const& inverse,
                     std::vector<element_id>&                      out) {
      std::size_t const n = table.size();
      auto is_inverse_pair = [&](element_id s, element_id t) {
        return table[table[s][t]][s] == s && table[table[t][s]][t] == t;
      };
      out.assign(n, undefined);
      for (element_id s = 0; s < n; ++s) {
        if (inverse) {
          if (!is_inverse_pair(s, (*inverse)[s])) {
            return ValidationReport{Axiom::inverse, {s}, "supplied inverse fails s s* s = s or s* s s* = s*"};
          }
          out[s] = (*inverse)[s];
        } else {
          for (element_id t = 0; t < n; ++t) {
            if (is_inverse_pair(s, t)) {
              out[s] = t;
              break;
            }
          }
          if (out[s] == undefined) {
            return ValidationReport{Axiom::inverse, {s}, "no inverse exists"};
          }
        }
      }
      return std::nullopt;
    }
  }  // namespace

  std::optional<ValidationReport>
  find_violation(std::vector<std::vector<element_id>> const& table,
                 std::optional<std::vector<element_id>> const& inverse) {
    if (auto r = check_shape(table, inverse)) {
      return r;
    }
    std::size_t const n = table.size();
    for (element_id s = 0; s < n; ++s) {
      for (element_id t = 0; t < n; ++t) {
        element_id const st = table[s][t];
        for (element_id u = 0; u < n; ++u) {
          if (table[st][u] != table[s][table[t][u]]) {
            return ValidationReport{Axiom::associativity, {s, t, u}, {}};
          }
        }
      }
    }
    std::vector<element_id> inv;
    if (auto r = resolve_inverses(table, inverse, inv)) {
      return r;
    }
    std::vector<element_id> idem;
    for (element_id s = 0; s < n; ++s) {
      if (table[s][s] == s) {
        idem.push_back(s);
      }
    }
    for (element_id e : idem) {
      for (element_id f : idem) {
        if (table[e][f] != table[f][e]) {
          return ValidationReport{Axiom::idempotents_commute, {e, f}, {}};
        }
      }
    }
    return std::nullopt;
  }

  FiniteInverseSemigroup::FiniteInverseSemigroup(
      std::vector<std::string>               names,
      std::vector<std::vector<element_id>>   table,
      std::optional<std::vector<element_id>> inverse)
      : _names(std::move(names)) {
    if (auto r = find_violation(table, inverse)) {
      throw ValidationError(std::move(*r));
    }
    std::size_t const n = table.size();
    if (_names.empty()) {
      for (std::size_t s = 0; s < n; ++s) {
        _names.push_back(std::to_string(s));
      }
    }
    if (_names.size() != n) {
      throw ValidationError(
          ValidationReport{Axiom::shape, {}, "name list has wrong length"});
    }
    _table.reserve(n * n);
    for (auto const& row : table) {
      _table.insert(_table.end(), row.begin(), row.end());
    }
    resolve_inverses(table, inverse, _inverse);
    for (element_id s = 0; s < n; ++s) {
      if (is_idempotent(s)) {
        _idempotents.push_back(s);
      }
    }
    for (element_id z = 0; z < n && !_zero; ++z) {
      bool ok = true;
      for (element_id s = 0; s < n && ok; ++s) {
        ok = product(z, s) == z && product(s, z) == z;
      }
      if (ok) {
        _zero = z;
      }
    }
    for (element_id o = 0; o < n && !_one; ++o) {
      bool ok = true;
      for (element_id s = 0; s < n && ok; ++s) {
        ok = product(o, s) == s && product(s, o) == s;
      }
      if (ok) {
        _one = o;
      }
    }
  }

  element_id
  FiniteInverseSemigroup::product(std::initializer_list<element_id> word) const {
    GF_ASSERT(word.size() > 0, "empty product");
    auto       it  = word.begin();
    element_id acc = *it++;
    for (; it != word.end(); ++it) {
      acc = product(acc, *it);
    }
    return acc;
  }

  element_id FiniteInverseSemigroup::index_of(std::string const& name) const {
    auto it = std::find(_names.begin(), _names.end(), name);
    if (it == _names.end()) {
      throw std::out_of_range("no element named \"" + name + "\"");
    }
    return static_cast<element_id>(it - _names.begin());
  }

  std::vector<std::vector<element_id>> FiniteInverseSemigroup::table() const {
    std::vector<std::vector<element_id>> out(size());
    for (std::size_t s = 0; s < size(); ++s) {
      out[s].assign(_table.begin() + s * size(), _table.begin() + (s + 1) * size());
    }
    return out;
  }

  FiniteInverseSemigroup
  validate(std::vector<std::vector<element_id>> const& table,
           std::optional<std::vector<element_id>> const& inverse,
           std::vector<std::string>                      names) {
    return FiniteInverseSemigroup(std::move(names), table, inverse);
  }

  bool natural_order_leq(FiniteInverseSemigroup const& S,
                         element_id                    e,
                         element_id                    f) {
    if (!S.is_idempotent(e) || !S.is_idempotent(f)) {
      throw NotIdempotent("natural_order_leq: arguments must be idempotent");
    }
    return S.product(e, f) == e;
  }

  bool is_clifford(FiniteInverseSemigroup const& S) {
    for (element_id s = 0; s < S.size(); ++s) {
      if (S.domain_idempotent(s) != S.range_idempotent(s)) {
        return false;
      }
    }
    return true;
  }

  bool is_commutative(FiniteInverseSemigroup const& S) {
    for (element_id s = 0; s < S.size(); ++s) {
      for (element_id t = s + 1; t < S.size(); ++t) {
        if (S.product(s, t) != S.product(t, s)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_group(FiniteInverseSemigroup const& S) {
    return S.idempotents().size() == 1;
  }

  namespace {
    // Subsemigroup generated by gens, as a membership mask.
    std::vector<bool> generated(FiniteInverseSemigroup const& S,
                                std::span<element_id const>   gens) {
      std::vector<bool>       in(S.size(), false);
      std::vector<element_id> members;
      for (element_id g : gens) {
        if (!in[g]) {
          in[g] = true;
          members.push_back(g);
        }
      }
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (element_id g : gens) {
          element_id p = S.product(members[i], g);
          if (!in[p]) {
            in[p] = true;
            members.push_back(p);
          }
        }
      }
      return in;
    }
  }  // namespace

  std::vector<element_id> generating_set(FiniteInverseSemigroup const& S) {
    std::vector<element_id> gens;
    std::vector<bool>       in(S.size(), false);
    for (element_id s = 0; s < S.size(); ++s) {
      if (!in[s]) {
        gens.push_back(s);
        in = generated(S, gens);
      }
    }
    return gens;
  }

  std::vector<std::vector<std::size_t>>
  factorisations(FiniteInverseSemigroup const& S,
                 std::span<element_id const>   generators) {
    std::vector<std::vector<std::size_t>> word(S.size());
    std::vector<bool>                     seen(S.size(), false);
    std::deque<element_id>                queue;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      element_id g = generators[i];
      if (!seen[g]) {
        seen[g] = true;
        word[g] = {i};
        queue.push_back(g);
      }
    }
    while (!queue.empty()) {
      element_id s = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < generators.size(); ++i) {
        element_id p = S.product(s, generators[i]);
        if (!seen[p]) {
          seen[p] = true;
          word[p] = word[s];
          word[p].push_back(i);
          queue.push_back(p);
        }
      }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      throw Error("factorisations: the given elements do not generate");
    }
    return word;
  }

  bool check_hom(FiniteInverseSemigroup const& source,
                 FiniteInverseSemigroup const& target,
                 SemigroupHom const&           h) {
    if (h.map.size() != source.size()) {
      return false;
    }
    for (element_id img : h.map) {
      if (img >= target.size()) {
        return false;
      }
    }
    for (element_id s = 0; s < source.size(); ++s) {
      for (element_id t = 0; t < source.size(); ++t) {
        if (h.map[source.product(s, t)] != target.product(h.map[s], h.map[t])) {
          return false;
        }
      }
    }
    return true;
  }

  FiniteInverseSemigroup zero_one_semilattice() {
    return FiniteInverseSemigroup({"0", "1"}, {{0, 0}, {0, 1}});
  }

  ////////////////////////////////////////////////////////////////////////
  // PartialBijection
  ////////////////////////////////////////////////////////////////////////

  PartialBijection::PartialBijection(std::vector<std::size_t> images)
      : _images(std::move(images)) {
    std::vector<bool> hit(_images.size(), false);
    for (std::size_t x : _images) {
      if (x == undefined) {
        continue;
      }
      if (x >= _images.size()) {
        throw Error("PartialBijection: image out of range");
      }
      if (hit[x]) {
        throw Error("PartialBijection: images are not distinct");
      }
      hit[x] = true;
    }
  }

  PartialBijection PartialBijection::identity(std::size_t degree) {
    std::vector<std::size_t> im(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      im[i] = i;
    }
    return PartialBijection(std::move(im));
  }

  PartialBijection PartialBijection::empty(std::size_t degree) {
    return PartialBijection(std::vector<std::size_t>(degree, undefined));
  }

  std::size_t PartialBijection::rank() const {
    return static_cast<std::size_t>(
        std::count_if(_images.begin(), _images.end(), [](std::size_t x) {
          return x != undefined;
        }));
  }

  PartialBijection PartialBijection::operator*(PartialBijection const& other) const {
    if (other.degree() != degree()) {
      throw Error("PartialBijection: degree mismatch");
    }
    std::vector<std::size_t> im(degree(), undefined);
    for (std::size_t i = 0; i < degree(); ++i) {
      if (other._images[i] != undefined) {
        im[i] = _images[other._images[i]];
      }
    }
    return PartialBijection(std::move(im));
  }

  PartialBijection PartialBijection::inverse() const {
    std::vector<std::size_t> im(degree(), undefined);
    for (std::size_t i = 0; i < degree(); ++i) {
      if (_images[i] != undefined) {
        im[_images[i]] = i;
      }
    }
    return PartialBijection(std::move(im));
  }

  std::string PartialBijection::to_string() const {
    std::string out;
    bool const  compact = degree() <= 10;
    for (std::size_t i = 0; i < degree(); ++i) {
      if (!compact && i > 0) {
        out += ',';
      }
      out += _images[i] == undefined ? std::string("-") : std::to_string(_images[i]);
    }
    return out;
  }

  FiniteInverseSemigroup
  generate_from_partial_bijections(std::vector<PartialBijection> const& generators,
                                   std::size_t                          limit) {
    if (generators.empty()) {
      throw Error("generate_from_partial_bijections: no generators");
    }
    std::size_t const degree = generators.front().degree();
    for (auto const& g : generators) {
      if (g.degree() != degree) {
        throw Error("generate_from_partial_bijections: generators differ in degree");
      }
    }
    std::vector<PartialBijection>            elements;
    std::map<PartialBijection, element_id>   index;
    auto add = [&](PartialBijection const& p) {
      if (index.emplace(p, elements.size()).second) {
        elements.push_back(p);
        if (elements.size() > limit) {
          throw SizeLimitExceeded("closure exceeds " + std::to_string(limit)
                                  + " elements");
        }
      }
    };
    std::vector<PartialBijection> gens = generators;
    for (auto const& g : generators) {
      gens.push_back(g.inverse());
    }
    for (auto const& g : gens) {
      add(g);
    }
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (auto const& g : gens) {
        add(elements[i] * g);
      }
    }
    std::size_t const                    n = elements.size();
    std::vector<std::vector<element_id>> table(n, std::vector<element_id>(n));
    std::vector<element_id>              inverse(n);
    std::vector<std::string>             names(n);
    for (element_id s = 0; s < n; ++s) {
      names[s]   = elements[s].to_string();
      inverse[s] = index.at(elements[s].inverse());
      for (element_id t = 0; t < n; ++t) {
        table[s][t] = index.at(elements[s] * elements[t]);
      }
    }
    return FiniteInverseSemigroup(std::move(names), std::move(table), std::move(inverse));
  }

}  // namespace gf
