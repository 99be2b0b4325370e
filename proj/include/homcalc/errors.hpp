#pragma once

#include <stdexcept>
#include <string>

namespace homcalc {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad JSON, bad expression syntax, unknown keys.
struct ParseError : Error {
  using Error::Error;
};

/// Structurally well-formed input that violates a documented invariant
/// (mismatched dimensions, failed axioms, unresolved references,
/// scalars from different fields in one computation).
struct ValidationError : Error {
  using Error::Error;
};

/// A request the mathematics refuses: homology of a non-flat connection,
/// degrees outside the stored truncation, q = 1 where q != 1 is required.
struct MathRefusal : Error {
  using Error::Error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void internal_check(bool cond, const char* what) {
  if (!cond) throw InternalError(what);
}

}  // namespace homcalc
