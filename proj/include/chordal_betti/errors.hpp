#pragma once

#include <stdexcept>
#include <string>

namespace chordal_betti {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Spec lists n_i and r_j of incompatible lengths, or values out of range.
struct LengthMismatch : Error {
  using Error::Error;
};

// No earlier clique can supply the requested overlap, or an overlap would
// swallow a whole clique.
struct InfeasibleIntersection : Error {
  using Error::Error;
};

// Explicit parent index outside 1..m.
struct BadParentIndex : Error {
  using Error::Error;
};

// A brute-force operation was asked to enumerate more vertices than the
// configured cap allows.
struct OracleCapExceeded : Error {
  using Error::Error;
};

// Alexander dual of the full simplex does not exist.
struct VoidDual : Error {
  using Error::Error;
};

// A closed form produced a negative graded Betti number.
struct NegativeBetti : Error {
  using Error::Error;
};

// Betti table entry requested at negative homological or internal degree.
struct BadRowRequest : Error {
  using Error::Error;
};

// Two internal computations of the same quantity disagree.
struct InternalMismatch : Error {
  using Error::Error;
};

// Parameter outside the admissible range of an operation.
struct RangeError : Error {
  using Error::Error;
};

// Identity family name or case tag not recognised.
struct UnknownIdentity : Error {
  using Error::Error;
};

}  // namespace chordal_betti
