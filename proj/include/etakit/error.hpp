#pragma once

#include <stdexcept>
#include <string>

namespace etakit {

// Base of every error the library raises. Messages name the offending item.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ETAKIT_DEFINE_ERROR(Name) \
  class Name : public Error {     \
   public:                        \
    using Error::Error;           \
  }

ETAKIT_DEFINE_ERROR(NotPalindromic);
ETAKIT_DEFINE_ERROR(ZeroArgument);
ETAKIT_DEFINE_ERROR(SyntaxError);
ETAKIT_DEFINE_ERROR(ConsistencyError);
ETAKIT_DEFINE_ERROR(UnknownComponent);
ETAKIT_DEFINE_ERROR(SameComponent);
ETAKIT_DEFINE_ERROR(JumpMismatch);
ETAKIT_DEFINE_ERROR(NonzeroHolonomy);
ETAKIT_DEFINE_ERROR(AsymmetricTally);
ETAKIT_DEFINE_ERROR(DepthTooSmall);
ETAKIT_DEFINE_ERROR(UndeclaredGenerator);
ETAKIT_DEFINE_ERROR(TemplateUnavailable);
ETAKIT_DEFINE_ERROR(ReplayError);

#undef ETAKIT_DEFINE_ERROR

}  // namespace etakit
