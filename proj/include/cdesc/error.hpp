#pragma once

#include <stdexcept>
#include <string>

namespace cdesc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Matrix shapes or chain-map identities do not fit together.
class InvalidMapError : public Error {
public:
    using Error::Error;
};

/// A cubical diagram is malformed: missing vertex/edge, non-commuting face.
class DiagramError : public Error {
public:
    using Error::Error;
};

/// A caller-supplied witness (contraction, splitting) fails its identity.
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// A named structural invariant is violated. `invariant()` carries the name
/// so that fixture loaders can report it.
class InvariantViolation : public Error {
public:
    InvariantViolation(std::string invariant, const std::string& detail)
        : Error(invariant + ": " + detail), invariant_(std::move(invariant)) {}

    const std::string& invariant() const noexcept { return invariant_; }

private:
    std::string invariant_;
};

/// A pair morphism lacks a strata map that a nonzero minor requires.
class IncompleteMorphismError : public Error {
public:
    using Error::Error;
};

class UnknownNameError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// Unknown command, target or missing option.
class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace cdesc
