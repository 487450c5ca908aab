#pragma once

#include <stdexcept>
#include <string>

namespace horochow {

/// Base class for every error thrown by the library.  Callers that do not
/// care about the precise failure mode can catch this single type.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- symmetric functions -----------------------------------------------------

/// A polynomial claimed to be symmetric is not invariant under some
/// transposition of adjacent variables.
struct NotSymmetric : Error {
    using Error::Error;
};

/// A partition has more parts than the requested number of variables.
struct TooManyParts : Error {
    using Error::Error;
};

// --- Schubert calculus --------------------------------------------------------

/// Two cycles living on different Grassmannians were combined.
struct ContextMismatch : Error {
    using Error::Error;
};

/// Degrees of the paired classes do not add up to the ambient dimension.
struct DegreeMismatch : Error {
    using Error::Error;
};

/// An operation that requires a homogeneous class received a mixed one.
struct Inhomogeneous : Error {
    using Error::Error;
};

// --- graded rings ---------------------------------------------------------------

/// A defining relation is not homogeneous for the generator grading.
struct InhomogeneousRelation : Error {
    using Error::Error;
};

/// The computed Hilbert function differs from the expected one; `degree`
/// is the first degree where they disagree.
struct HilbertMismatch : Error {
    int degree;
    HilbertMismatch(const std::string& msg, int d) : Error(msg), degree(d) {}
};

/// A normal form was requested beyond the precomputed degree range.
struct DegreeOutOfRange : Error {
    using Error::Error;
};

/// Two elements of different rings were combined.
struct RingMismatch : Error {
    using Error::Error;
};

/// A quantum operation was applied to a ring without a quantum parameter.
struct NoQuantumParameter : Error {
    using Error::Error;
};

/// The proposed family is not a vector-space basis of its graded piece.
struct NotABasis : Error {
    using Error::Error;
};

/// The Poincare pairing is singular where it was required to be perfect.
struct DegeneratePairing : Error {
    using Error::Error;
};

/// A structural invariant of a variety description failed; the message
/// names the invariant.
struct InvariantViolation : Error {
    using Error::Error;
};

// --- Hasse diagrams ---------------------------------------------------------------

/// A class fed to the Chevalley operator mixes several degrees.
struct MixedDegrees : Error {
    using Error::Error;
};

/// A vertex id is not present in the diagram.
struct UnknownVertex : Error {
    using Error::Error;
};

/// A symbol referenced by a table or golden record does not resolve.
struct UnknownSymbol : Error {
    using Error::Error;
};

/// A Giambelli-type linear system has no solution; `degree`/`vertex`
/// locate the first failure.
struct Inconsistent : Error {
    int degree;
    std::string vertex;
    Inconsistent(const std::string& msg, int d, std::string v)
        : Error(msg), degree(d), vertex(std::move(v)) {}
};

/// A Giambelli-type linear system has several solutions in some degree.
struct Underdetermined : Error {
    int degree;
    Underdetermined(const std::string& msg, int d) : Error(msg), degree(d) {}
};

// --- parsing and catalog ---------------------------------------------------------

/// Malformed polynomial text; `offset` is the byte position of the error.
struct SyntaxError : Error {
    std::size_t offset;
    SyntaxError(const std::string& msg, std::size_t off) : Error(msg), offset(off) {}
};

/// An identifier in polynomial text is not among the declared generators.
struct UnknownIdentifier : Error {
    using Error::Error;
};

/// A document does not match the variety-description schema; `path`
/// points at the offending field.
struct SchemaError : Error {
    std::string path;
    SchemaError(const std::string& msg, std::string p) : Error(msg), path(std::move(p)) {}
};

/// Requested builtin variety does not exist.
struct UnknownVariety : Error {
    using Error::Error;
};

}  // namespace horochow
