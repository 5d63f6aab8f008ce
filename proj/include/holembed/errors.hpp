#pragma once

#include <stdexcept>
#include <string>

namespace holembed {

/// Base class of every failure raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A matrix entry that must be strictly positive is zero or negative.
struct NonPositiveWeight : Error {
  using Error::Error;
};

/// A seminorm ladder decreases somewhere: a(j,n) > a(j+1,n).
struct LadderViolation : Error {
  using Error::Error;
};

/// A coordinate index lies outside the materialized window.
struct WindowExceeded : Error {
  using Error::Error;
};

/// An operation that needs a nonzero functional received the zero one.
struct ZeroFunctional : Error {
  using Error::Error;
};

/// Biorthogonalization ran out of candidate pairs with nonzero pairing.
struct ExhaustedWithoutPivot : Error {
  using Error::Error;
};

/// A parameter is outside its admissible range or malformed.
struct InvalidParameter : Error {
  using Error::Error;
};

/// No certified tail bound is available for the requested parameters.
struct CertificationUnavailable : Error {
  using Error::Error;
};

/// Two objects that must share a truncation stage do not.
struct StageMismatch : Error {
  using Error::Error;
};

/// An evaluation point or radius lies outside the declared domain.
struct OutsideDomain : Error {
  using Error::Error;
};

}  // namespace holembed
