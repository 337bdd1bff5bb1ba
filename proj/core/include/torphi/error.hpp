#pragma once

#include <stdexcept>
#include <string>

namespace torphi {

// Base of all library errors. The CLI maps the three subclasses onto its
// exit codes: InputError -> 1, ValidationError -> 2, ConsistencyError -> 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unreadable or malformed input (I/O, syntax, wrong JSON shape).
class InputError : public Error {
public:
    using Error::Error;
};

/// Well-formed input that violates a mathematical precondition or a
/// construction invariant (Riemann form symmetry, unimodularity, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An identity that must hold for every valid input failed. Never raised on
/// a correct build; it signals a modelling bug.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace torphi
