#pragma once

#include <stdexcept>
#include <string>

namespace thl {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input; carries the offending position when known.
struct ParseError : Error {
  explicit ParseError(const std::string& msg, long pos = -1)
      : Error(pos >= 0 ? msg + " (at position " + std::to_string(pos) + ")" : msg),
        position(pos) {}
  long position;
};

/// Leaf/root or size mismatch between composed objects.
struct DimensionMismatch : Error {
  using Error::Error;
};

/// Element is not in the oriented subgroup; construction requiring membership failed.
struct NotOriented : Error {
  explicit NotOriented(const std::string& msg, int idx = -1)
      : Error(idx >= 0 ? msg + " (first mismatch at boundary index " + std::to_string(idx) + ")" : msg),
        mismatch_index(idx) {}
  int mismatch_index;  ///< 1-based boundary position of the first sign mismatch, -1 if n/a.
};

/// Tangle boundaries cannot be glued (length or sign clash).
struct BoundaryMismatch : Error {
  explicit BoundaryMismatch(const std::string& msg, int idx = -1)
      : Error(idx >= 0 ? msg + " (at boundary index " + std::to_string(idx) + ")" : msg),
        index(idx) {}
  int index;  ///< 1-based position of the first offending boundary point.
};

/// A size guard (enumeration bound, matrix size cap, ...) was exceeded.
struct GuardExceeded : Error {
  using Error::Error;
};

/// Requested rewrite (Reidemeister move, reduction) does not apply at the site.
struct NotApplicable : Error {
  using Error::Error;
};

/// Gram matrix failed its Hermitian-symmetry check.
struct NonHermitian : Error {
  using Error::Error;
};

/// Iterative eigenvalue sweep failed to converge within the sweep bound.
struct NoConvergence : Error {
  using Error::Error;
};

/// Internal invariant violation (malformed diagram, inconsistent orientation, ...).
struct InvariantViolation : Error {
  using Error::Error;
};

}  // namespace thl
