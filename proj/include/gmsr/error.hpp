#pragma once

#include <stdexcept>
#include <string>

namespace gmsr {

// Every failure raised by the library derives from Error. ParamError covers
// bad configuration (CLI exit code 2), DataError covers bad or inconsistent
// input data (CLI exit code 3).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParamError : public Error {
 public:
  using Error::Error;
};

class DataError : public Error {
 public:
  using Error::Error;
};

#define GMSR_DEFINE_ERROR(Name, Base)       \
  class Name : public Base {                \
   public:                                  \
    explicit Name(const std::string& what)  \
        : Base(#Name ": " + what) {}        \
  };

GMSR_DEFINE_ERROR(InvalidParams, ParamError)
GMSR_DEFINE_ERROR(InfeasibleField, ParamError)
GMSR_DEFINE_ERROR(BudgetError, ParamError)
GMSR_DEFINE_ERROR(UnsupportedType, ParamError)
GMSR_DEFINE_ERROR(NoMessageCapacity, ParamError)
GMSR_DEFINE_ERROR(ByteModeNeedsLargeField, ParamError)
GMSR_DEFINE_ERROR(EnumerationTooLarge, ParamError)

GMSR_DEFINE_ERROR(ModulusMismatch, DataError)
GMSR_DEFINE_ERROR(DivisionByZero, DataError)
GMSR_DEFINE_ERROR(DimensionMismatch, DataError)
GMSR_DEFINE_ERROR(SingularMatrix, DataError)
GMSR_DEFINE_ERROR(MalformedMatrix, DataError)
GMSR_DEFINE_ERROR(InconsistentShares, DataError)
GMSR_DEFINE_ERROR(DegeneratePoints, DataError)
GMSR_DEFINE_ERROR(LengthMismatch, DataError)
GMSR_DEFINE_ERROR(IndexOutOfRange, DataError)
GMSR_DEFINE_ERROR(DuplicateNode, DataError)
GMSR_DEFINE_ERROR(FormatError, DataError)
GMSR_DEFINE_ERROR(SymbolOutOfRange, DataError)
GMSR_DEFINE_ERROR(MissingShares, DataError)

#undef GMSR_DEFINE_ERROR

}  // namespace gmsr
