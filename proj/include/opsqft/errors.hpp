#pragma once

#include <stdexcept>
#include <string>

namespace opsqft {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define OPSQFT_DEFINE_ERROR(Name)            \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  };

// Algebra.
OPSQFT_DEFINE_ERROR(ZeroQuaternion)
OPSQFT_DEFINE_ERROR(InvalidPureUnit)

// Orthogonal planes split.
OPSQFT_DEFINE_ERROR(DegenerateContext)
OPSQFT_DEFINE_ERROR(InvalidFrame)
OPSQFT_DEFINE_ERROR(NotInPlane)

// Transforms.
OPSQFT_DEFINE_ERROR(VariantMismatch)
OPSQFT_DEFINE_ERROR(ShapeMismatch)

// Files and text.
OPSQFT_DEFINE_ERROR(IoFailure)
OPSQFT_DEFINE_ERROR(BadMagic)
OPSQFT_DEFINE_ERROR(BadVersion)
OPSQFT_DEFINE_ERROR(TruncatedPayload)
OPSQFT_DEFINE_ERROR(UnsupportedFormat)
OPSQFT_DEFINE_ERROR(MalformedHeader)
OPSQFT_DEFINE_ERROR(ParseError)

#undef OPSQFT_DEFINE_ERROR

}  // namespace opsqft
