#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aridyn {

// Common base so callers can catch any library error in one clause.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A map evaluation produced an all-zero factor vector: the point hit the
// base locus of a map that is only a morphism away from it.
struct IndeterminacyError : Error {
    IndeterminacyError(const std::string& msg, long step_, int factor_)
        : Error(msg), step(step_), factor(factor_) {}
    long step;
    int factor;
};

// A configured budget (term count, coefficient size, depth, bit size) was hit.
struct ResourceError : Error {
    using Error::Error;
};

// An operation's mathematical hypothesis does not hold for the given input.
struct DomainError : Error {
    using Error::Error;
};

struct NotInSpanError : Error {
    using Error::Error;
};

// Exact chain data was requested from a spectrum flagged inexact.
struct InexactSpectrumError : Error {
    using Error::Error;
};

// An internal consistency check failed; indicates an arithmetic bug.
struct AssertionFailure : Error {
    using Error::Error;
};

struct CommutativityError : Error {
    using Error::Error;
};

struct HypothesisError : Error {
    using Error::Error;
};

// A value sits too close to its error bound to decide (non)vanishing.
// Callers should raise the working precision and retry.
struct AmbiguousZeroError : Error {
    using Error::Error;
};

struct InsufficientDataError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    ConfigError(const std::string& msg, int line_ = 0) : Error(msg), line(line_) {}
    int line;
};

}  // namespace aridyn
