#pragma once

#include <stdexcept>
#include <string>

namespace pdaw {

/// Base of every exception the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input that is not a well-formed array or set family (ragged rows,
/// non-positive symbol ids, bad tokens, mismatched universes).
class StructuralError : public Error {
public:
    using Error::Error;
};

/// A parameter outside an operation's domain.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// A size beyond a configured cap (PDAW_MAX_ROWS, binomial overflow).
class CapacityError : public Error {
public:
    using Error::Error;
};

} // namespace pdaw
