#pragma once

#include <stdexcept>
#include <string>

namespace avelab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: non-square matrix, NaN entries, length mismatch.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Input was valid, but the operation needs another dimension (e.g. 2x2 only).
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Exhaustive enumeration over 2^n objects refused above the configured cap.
class DimensionCapExceeded : public Error {
public:
    using Error::Error;
};

/// An iterative kernel did not converge, or a numerical contract could not be met.
class NumericFailure : public Error {
public:
    using Error::Error;
};

/// A checked mathematical identity did not hold numerically.
class InvariantBreach : public Error {
public:
    using Error::Error;
};

}  // namespace avelab
