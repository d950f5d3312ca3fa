#pragma once

#include <stdexcept>
#include <string>

namespace grasslog {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Argument outside the supported domain (weight, z = 0, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Principal-branch polylogarithm requested on the cut (1, inf).
struct CutError : Error {
    using Error::Error;
};

struct IndexError : Error {
    using Error::Error;
};

/// A determinant required to be nonzero vanished; the message names it.
struct DegenerateError : Error {
    using Error::Error;
};

/// A cross-ratio (or triple ratio) landed on {0, 1, inf}.
struct CrossRatioDegenerateError : DegenerateError {
    using DegenerateError::DegenerateError;
};

/// Configuration fails the genericity requirement of an integration routine.
struct NonGenericError : Error {
    using Error::Error;
};

/// Alternation over S_n with n beyond the factorial guard.
struct SizeError : Error {
    using Error::Error;
};

/// Pointwise form evaluation on (or numerically at) a zero locus.
struct SingularityError : Error {
    using Error::Error;
};

} // namespace grasslog
