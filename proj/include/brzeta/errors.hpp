#pragma once

#include <stdexcept>
#include <string>

namespace brzeta {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mismatched alphabets, ambients or shapes.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// Inverting a series whose constant term is not a unit.
class NonUnitError : public Error {
public:
    using Error::Error;
};

/// An infinite product whose factors do not tend to 1 in the degree topology.
class PseudoConvergenceError : public Error {
public:
    using Error::Error;
};

/// Enumeration would exceed the configured budget.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// A closed formula disagreed with its cross-check (non-integral coefficient,
/// mismatching dual computation, failed factorization).
class FormulaViolation : public Error {
public:
    using Error::Error;
};

/// Input document does not match the expected schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Oracle model parameters that would make the enumeration unsound.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace brzeta
