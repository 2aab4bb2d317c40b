#pragma once

#include <stdexcept>

namespace abelint {

/// Root-counting routines reject the identically-zero polynomial.
struct ZeroPolynomialError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed input document (bad JSON, bad fraction syntax, negative exponents, ...).
struct FormParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A numerical routine exhausted its budget before reaching the requested tolerance.
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An exact-arithmetic invariant that should hold by construction was falsified.
/// Seeing this means a bug, not bad input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace abelint
