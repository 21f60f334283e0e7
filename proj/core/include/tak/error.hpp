#pragma once

#include <stdexcept>
#include <string>

namespace tak {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid knot parameters, malformed knot specs, unsupported inputs.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// The requested trace coordinates only admit an abelian (reducible) representation.
class ReducibleRepresentation : public Error {
public:
    using Error::Error;
};

/// Input matrices do not satisfy the knot group relation.
class NotARepresentation : public Error {
public:
    using Error::Error;
};

/// Laurent polynomial long division left a remainder above tolerance.
class NotDivisible : public Error {
public:
    using Error::Error;
};

/// Zero polynomial passed where a nonzero one is required.
class ZeroPolynomial : public Error {
public:
    using Error::Error;
};

/// Polynomial root finding failed to meet its residual target.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

}  // namespace tak
