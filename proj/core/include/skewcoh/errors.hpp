#pragma once

#include <stdexcept>
#include <string>

namespace skewcoh {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad spec files, mismatched moduli, invalid arguments.
struct InputError : Error {
  using Error::Error;
};

/// A mathematical guarantee failed to hold; indicates a bug or a broken
/// precondition (e.g. a certificate that should exist could not be built).
struct VerificationError : Error {
  using Error::Error;
};

}  // namespace skewcoh
