#pragma once

#include <stdexcept>
#include <string>

namespace segre {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// -- field construction / arithmetic --------------------------------------

struct NotPrimePower : Error {
    using Error::Error;
};

/// Field order exceeds the configured cap (default 2^16, see Field).
struct UnsupportedOrder : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

// -- polynomials -----------------------------------------------------------

struct IncompleteTable : Error {
    using Error::Error;
};

// -- projective plane --------------------------------------------------------

struct IdenticalPoints : Error {
    using Error::Error;
};

struct DegenerateFrame : Error {
    using Error::Error;
};

// -- arcs, ovals, conics -----------------------------------------------------

struct DuplicatePoint : Error {
    using Error::Error;
};

struct NotMember : Error {
    using Error::Error;
};

/// The point has zero or several tangents: the input is not a genuine oval,
/// or the field order is even.
struct NotUniqueTangent : Error {
    using Error::Error;
};

struct DegenerateInput : Error {
    using Error::Error;
};

struct DegenerateConic : Error {
    using Error::Error;
};

// -- reconstruction pipeline --------------------------------------------------

struct EvenOrder : Error {
    using Error::Error;
};

struct NotAnOval : Error {
    using Error::Error;
};

struct NotNormalized : Error {
    using Error::Error;
};

/// Denominator of the product identity vanished; signals an arc violation.
struct ZeroDenominator : Error {
    using Error::Error;
};

}  // namespace segre
