#pragma once

#include <stdexcept>

namespace qplab {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };

// exact arithmetic
struct UnboundVariable : Error { using Error::Error; };
struct ZeroDenominatorBinding : Error { using Error::Error; };
struct ModulusMismatch : Error { using Error::Error; };
struct NotAUnit : Error { using Error::Error; };

// family pipeline
struct DegenerateParameters : Error { using Error::Error; };
struct SingularQuotient : Error { using Error::Error; };
struct SingularQuartic : Error { using Error::Error; };
struct NonIntegralGenus : Error { using Error::Error; };
struct TwoTorsionInput : Error { using Error::Error; };

// elliptic curves
struct SingularCurve : Error { using Error::Error; };
struct TwoTorsionAbscissa : Error { using Error::Error; };

// Moebius group machinery
struct SingularMatrix : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };

// scans
struct ScanCapExceeded : Error { using Error::Error; };

}  // namespace qplab
