#pragma once

#include <stdexcept>
#include <string>

namespace orbistab {

// Base class of every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation that needs a nonzero sheaf (or polynomial) received the zero one.
struct ZeroSheafError : Error {
  ZeroSheafError() : Error("zero sheaf") {}
  using Error::Error;
};

// Reduced polynomial requested for a polynomial whose leading coefficient is
// not positive; such data cannot come from a nonzero sheaf.
struct NonPositiveLeadingError : Error {
  NonPositiveLeadingError() : Error("leading coefficient is not positive") {}
};

// Slope of a zero-dimensional object is undefined.
struct DimensionZeroError : Error {
  DimensionZeroError() : Error("slope undefined in dimension zero") {}
  using Error::Error;
};

// Mismatched list lengths (exponents vs. stacky points, recursion arity, ...).
struct ShapeMismatchError : Error {
  using Error::Error;
};

// The operation is only defined for locally free (torsion free) input.
struct TorsionNotSupportedError : Error {
  TorsionNotSupportedError() : Error("torsion summands not supported here") {}
};

// Parabolic level data that no orbifold line bundle realizes.
struct NotRealizableError : Error {
  using Error::Error;
};

// The generating sheaf does not carry every stabilizer character with equal
// multiplicity, which the degree identity requires.
struct UnbalancedGeneratingSheafError : Error {
  UnbalancedGeneratingSheafError()
      : Error("generating sheaf characters are not balanced") {}
};

// A semistable object was required.
struct NotSemistableError : Error {
  NotSemistableError() : Error("object is not semistable") {}
  using Error::Error;
};

// The supplied subobject lattice violates a uniqueness property every honest
// sheaf lattice has; the algorithms refuse to guess.
struct InconsistentLatticeError : Error {
  using Error::Error;
};

// Subobject enumeration would exceed the supported size.
struct TooLargeError : Error {
  using Error::Error;
};

// The computation is only implemented over genus-zero base curves.
struct UnsupportedGenusError : Error {
  UnsupportedGenusError()
      : Error("only genus-zero base curves are supported here") {}
};

}  // namespace orbistab
