#pragma once

#include <stdexcept>
#include <string>

namespace subordlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Denominator of a quotient fell below the configured floor.
struct ZeroDenominator : Error {
    using Error::Error;
};

/// A Blaschke zero lies on or outside the unit circle.
struct InvalidZero : Error {
    using Error::Error;
};

/// Division by zero inside a psi expression.
struct DivisionByZero : Error {
    using Error::Error;
};

struct UnknownTheorem : Error {
    using Error::Error;
};

/// Root bracket does not enclose a sign change.
struct NoSignChange : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace subordlab
