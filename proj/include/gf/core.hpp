#pragma once

// Finite inverse semigroups given by Cayley tables, partial bijections, and
// homomorphisms between finite semigroups.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gf/error.hpp"

namespace gf {

  using element_id = std::size_t;

  ////////////////////////////////////////////////////////////////////////
  // Validation reports
  ////////////////////////////////////////////////////////////////////////

  enum class Axiom { shape, associativity, inverse, idempotents_commute };

  //! The first axiom a candidate table violates, with a witness.
  //!
  //! Witness layout: associativity (s, t, u); inverse (s); idempotents_commute
  //! (e, f); shape (row, column) or empty.
  struct ValidationReport {
    Axiom                   axiom;
    std::vector<element_id> witness;
    std::string             detail;

    std::string message() const;
  };

  class ValidationError : public Error {
   public:
    explicit ValidationError(ValidationReport report);
    ValidationReport const& report() const noexcept {
      return _report;
    }

   private:
    ValidationReport _report;
  };

  ////////////////////////////////////////////////////////////////////////
  // FiniteInverseSemigroup
  ////////////////////////////////////////////////////////////////////////

  //! An inverse semigroup on the element ids 0, ..., n - 1.
  //!
  //! Instances are immutable and always satisfy the inverse semigroup axioms;
  //! every constructor validates. Zero and identity are detected, never
  //! declared.
  class FiniteInverseSemigroup {
   public:
    //! Validates \p table (row-major, table[s][t] = st). When \p inverse is
    //! absent the inverse of each s is searched for. Throws ValidationError.
    FiniteInverseSemigroup(std::vector<std::string>             names,
                           std::vector<std::vector<element_id>> table,
                           std::optional<std::vector<element_id>> inverse
                           = std::nullopt);

    std::size_t size() const noexcept {
      return _names.size();
    }

    element_id product(element_id s, element_id t) const noexcept {
      return _table[s * size() + t];
    }

    element_id product(std::initializer_list<element_id> word) const;

    element_id inverse(element_id s) const noexcept {
      return _inverse[s];
    }

    bool is_idempotent(element_id s) const noexcept {
      return product(s, s) == s;
    }

    //! Ascending element ids of E(S).
    std::vector<element_id> const& idempotents() const noexcept {
      return _idempotents;
    }

    std::optional<element_id> zero() const noexcept {
      return _zero;
    }
    std::optional<element_id> one() const noexcept {
      return _one;
    }

    //! s*s
    element_id domain_idempotent(element_id s) const noexcept {
      return product(inverse(s), s);
    }
    //! ss*
    element_id range_idempotent(element_id s) const noexcept {
      return product(s, inverse(s));
    }

    std::string const& name(element_id s) const {
      return _names.at(s);
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    //! Throws std::out_of_range if no element carries \p name.
    element_id index_of(std::string const& name) const;

    std::vector<std::vector<element_id>> table() const;
    std::vector<element_id> const& inverses() const noexcept {
      return _inverse;
    }

   private:
    std::vector<std::string> _names;
    std::vector<element_id>  _table;
    std::vector<element_id>  _inverse;
    std::vector<element_id>  _idempotents;
    std::optional<element_id> _zero;
    std::optional<element_id> _one;
  };

  //! Returns the first violated axiom, or nullopt if \p table (with optional
  //! \p inverse) describes an inverse semigroup.
  std::optional<ValidationReport>
  find_violation(std::vector<std::vector<element_id>> const& table,
                 std::optional<std::vector<element_id>> const& inverse
                 = std::nullopt);

  //! Checks and builds; element names default to "0", "1", ...
  FiniteInverseSemigroup
  validate(std::vector<std::vector<element_id>> const& table,
           std::optional<std::vector<element_id>> const& inverse
           = std::nullopt,
           std::vector<std::string> names = {});

  bool natural_order_leq(FiniteInverseSemigroup const& S,
                         element_id                    e,
                         element_id                    f);
  bool is_clifford(FiniteInverseSemigroup const& S);
  bool is_commutative(FiniteInverseSemigroup const& S);
  bool is_group(FiniteInverseSemigroup const& S);

  //! Greedy generating set: each member is not in the subsemigroup generated
  //! by the earlier ones.
  std::vector<element_id> generating_set(FiniteInverseSemigroup const& S);

  //! For every element a word over \p generators (indices into it) whose
  //! product is that element. Throws if \p generators does not generate.
  std::vector<std::vector<std::size_t>>
  factorisations(FiniteInverseSemigroup const& S,
                 std::span<element_id const>   generators);

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms
  ////////////////////////////////////////////////////////////////////////

  struct SemigroupHom {
    std::vector<element_id> map;

    element_id operator()(element_id s) const {
      return map.at(s);
    }
    bool operator==(SemigroupHom const&) const = default;
  };

  bool check_hom(FiniteInverseSemigroup const& source,
                 FiniteInverseSemigroup const& target,
                 SemigroupHom const&           h);

  //! The two-element semilattice ({0,1}, ·); element 0 is "0", 1 is "1".
  FiniteInverseSemigroup zero_one_semilattice();

  ////////////////////////////////////////////////////////////////////////
  // Partial bijections
  ////////////////////////////////////////////////////////////////////////

  //! A partial injective map on {0, ..., degree - 1}; undefined images are
  //! gf::undefined.
  class PartialBijection {
   public:
    explicit PartialBijection(std::vector<std::size_t> images);

    static PartialBijection identity(std::size_t degree);
    static PartialBijection empty(std::size_t degree);

    std::size_t degree() const noexcept {
      return _images.size();
    }
    std::size_t operator[](std::size_t i) const {
      return _images.at(i);
    }
    std::vector<std::size_t> const& images() const noexcept {
      return _images;
    }
    std::size_t rank() const;

    //! (this * other)(i) = this(other(i)): apply other first.
    PartialBijection operator*(PartialBijection const& other) const;
    PartialBijection inverse() const;

    //! "10-" style for degree <= 10, comma separated otherwise.
    std::string to_string() const;

    auto operator<=>(PartialBijection const&) const = default;

   private:
    std::vector<std::size_t> _images;
  };

  inline constexpr std::size_t default_size_limit = 100'000;

  //! Closure of \p generators under composition and inversion. Element ids
  //! follow discovery order starting from the generators; names come from
  //! PartialBijection::to_string.
  FiniteInverseSemigroup
  generate_from_partial_bijections(std::vector<PartialBijection> const& generators,
                                   std::size_t limit = default_size_limit);

}  // namespace gf
