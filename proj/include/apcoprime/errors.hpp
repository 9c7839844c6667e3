#pragma once

#include <stdexcept>
#include <string>

namespace apcoprime {

/// Caller supplied an argument outside an operation's domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnsupportedRingError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class RingMismatchError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class DivisionByZeroError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class ParseError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// A postcondition that must hold mathematically did not. Always a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

#define APCOPRIME_ENSURE(cond, msg)                                             \
    do {                                                                        \
        if (!(cond))                                                            \
            throw ::apcoprime::InvariantViolation(std::string(msg) + " [" #cond \
                                                  "]");                         \
    } while (0)

}  // namespace apcoprime
