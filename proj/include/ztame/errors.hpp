#pragma once

#include <stdexcept>
#include <string>

namespace ztame {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroPolynomialError : Error {
  ZeroPolynomialError() : Error("operation undefined on the zero polynomial") {}
};

struct DivisionByZeroError : Error {
  DivisionByZeroError() : Error("division by the zero polynomial") {}
};

struct NegativeIndexError : Error {
  NegativeIndexError() : Error("variable index would become negative") {}
};

struct IndexOverflowError : Error {
  using Error::Error;
};

struct NotXYHomogeneousError : Error {
  NotXYHomogeneousError() : Error("polynomial is not homogeneous in x,y jointly") {}
};

struct NotLinearFormError : Error {
  NotLinearFormError() : Error("polynomial is not a sum of z^i x z^j and z^i y z^j terms") {}
};

struct NotLinearInXYError : Error {
  NotLinearInXYError() : Error("coordinates are not linear in x and y") {}
};

struct InvalidGeneratorError : Error {
  using Error::Error;
};

struct TrivialWordError : Error {
  TrivialWordError() : Error("normal form is trivial") {}
};

struct OutsideCaseSplitError : Error {
  OutsideCaseSplitError() : Error("normal form is outside the leading-term case split") {}
};

}  // namespace ztame
