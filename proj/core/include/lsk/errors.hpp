#ifndef LSK_ERRORS_HPP
#define LSK_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace lsk {

/// Base class of every error thrown by the kernel.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mixing truncation orders (or generator alphabets) is a hard error, never
// an implicit coercion.
struct TruncationMismatch : Error { using Error::Error; };

// An argument violates a homogeneity or degree requirement.
struct DegreeError : Error { using Error::Error; };

// The argument of an ad-series or exponential carries a length-0 (unit) term.
struct UnitTermError : Error { using Error::Error; };

// The argument of the logarithm is not of the form 1 + (length >= 1 terms).
struct NotUnipotent : Error { using Error::Error; };

struct NegativePower : Error { using Error::Error; };
struct NegativeIndex : Error { using Error::Error; };

// A degree -1 element failed the Maurer-Cartan equation up to the truncation.
struct NotMaurerCartan : Error { using Error::Error; };

// The Maurer-Cartan stage-by-stage solver hit an inconsistent linear system;
// the message carries the violated quadratic constraint.
struct NoSolution : Error { using Error::Error; };

// A Maurer-Cartan linear part whose coefficients sum to neither 0 nor 1.
struct FamilyViolation : Error { using Error::Error; };

// Attempt to connect Maurer-Cartan elements of different families.
struct DisconnectedComponents : Error { using Error::Error; };

// A constructive claim that should hold by theory failed its runtime check.
// Always indicates an implementation bug, never expected input.
struct CertificationError : Error { using Error::Error; };

struct ParseError : Error {
    ParseError(std::string message, int line, int column,
               std::vector<std::string> expected = {});
    int line;
    int column;
    std::vector<std::string> expected;
};

struct UnknownSymbol : Error { using Error::Error; };

// Structured-text (JSON) interchange violations.
struct SchemaError : Error { using Error::Error; };
struct NonReducedCoefficient : SchemaError { using SchemaError::SchemaError; };
struct DuplicateWord : SchemaError { using SchemaError::SchemaError; };

}  // namespace lsk

#endif  // LSK_ERRORS_HPP
