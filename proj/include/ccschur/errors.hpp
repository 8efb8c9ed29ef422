#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccschur {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CCSCHUR_DEFINE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

CCSCHUR_DEFINE_ERROR(NotPrime);
CCSCHUR_DEFINE_ERROR(DivisionByZero);
CCSCHUR_DEFINE_ERROR(FieldMismatch);
CCSCHUR_DEFINE_ERROR(ZeroElement);
CCSCHUR_DEFINE_ERROR(NotCoprime);
CCSCHUR_DEFINE_ERROR(InvalidRing);
CCSCHUR_DEFINE_ERROR(DimensionMismatch);
CCSCHUR_DEFINE_ERROR(RingMismatch);
CCSCHUR_DEFINE_ERROR(NotADivisor);
CCSCHUR_DEFINE_ERROR(ZeroGenerator);
CCSCHUR_DEFINE_ERROR(ZeroCode);
CCSCHUR_DEFINE_ERROR(NotConstacyclic);
CCSCHUR_DEFINE_ERROR(BelowRegularity);
CCSCHUR_DEFINE_ERROR(IndexOutOfRange);
CCSCHUR_DEFINE_ERROR(NotQuasiTwisted);
CCSCHUR_DEFINE_ERROR(ProjectionNotConstacyclic);
CCSCHUR_DEFINE_ERROR(TooManyDivisors);
CCSCHUR_DEFINE_ERROR(ParseError);
CCSCHUR_DEFINE_ERROR(InvalidArgument);

#undef CCSCHUR_DEFINE_ERROR

/// Raised when the dimension sequence has not stabilized within the
/// requested number of powers. Carries the dimensions computed so far.
class Unstabilized : public Error {
 public:
  Unstabilized(const std::string& what, std::vector<std::size_t> partial_dims)
      : Error(what), partial_dims_(std::move(partial_dims)) {}

  const std::vector<std::size_t>& partial_dims() const noexcept { return partial_dims_; }

 private:
  std::vector<std::size_t> partial_dims_;
};

}  // namespace ccschur
