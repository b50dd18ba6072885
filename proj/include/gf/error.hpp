#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace gf {

  //! Sentinel for "no element" / "composition undefined".
  inline constexpr std::size_t undefined = std::numeric_limits<std::size_t>::max();

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Raised when an internal consistency check fails; always a bug.
  class InternalError : public Error {
   public:
    using Error::Error;
  };

#define GF_DECLARE_ERROR(Name)  \
  class Name : public Error {   \
   public:                      \
    using Error::Error;         \
  };

  GF_DECLARE_ERROR(SizeLimitExceeded)
  GF_DECLARE_ERROR(NotIdempotent)
  GF_DECLARE_ERROR(NotNormal)
  GF_DECLARE_ERROR(NotInvariant)
  GF_DECLARE_ERROR(OutsideDomain)
  GF_DECLARE_ERROR(NotInvariantSet)
  GF_DECLARE_ERROR(NotASubgroupoid)
  GF_DECLARE_ERROR(NotInjectiveOnUnits)
  GF_DECLARE_ERROR(NotGroupBundle)
  GF_DECLARE_ERROR(NotClifford)
  GF_DECLARE_ERROR(EmptySupport)
  GF_DECLARE_ERROR(SearchBudgetExceeded)
  GF_DECLARE_ERROR(GroupoidAxiomError)
  GF_DECLARE_ERROR(ParseError)
  GF_DECLARE_ERROR(UnknownCongruenceName)

#undef GF_DECLARE_ERROR

}  // namespace gf

#define GF_ASSERT(cond, msg)                                              \
  do {                                                                    \
    if (!(cond)) {                                                        \
      throw ::gf::InternalError(std::string(__FILE__) + ":"               \
                                + std::to_string(__LINE__) + ": " + (msg)); \
    }                                                                     \
  } while (false)
