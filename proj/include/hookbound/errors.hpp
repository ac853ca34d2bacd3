#pragma once

#include <stdexcept>
#include <string>

namespace hookbound {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text input (partition or rational literals).
class ParseError : public Error {
public:
    using Error::Error;
};

// An argument violates an operation's domain, e.g. a cell outside the diagram.
class DomainError : public Error {
public:
    using Error::Error;
};

// A bound was requested outside the hypotheses under which it is claimed.
// The message names the first failing condition.
class HypothesisError : public Error {
public:
    using Error::Error;
};

// Brute-force oracle called beyond its size guard.
class GuardError : public Error {
public:
    using Error::Error;
};

// A construction produced a state contradicting one of its own proven
// invariants. Always a bug (or a defect in the argument being executed).
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace hookbound
