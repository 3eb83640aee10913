#pragma once

#include <stdexcept>
#include <string>

namespace netid {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed edge-list input; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// A value is outside its admissible range (nonpositive length, unknown vertex, ...).
class ValueError : public Error {
public:
    using Error::Error;
};

/// The input graph is not connected.
class ConnectivityError : public Error {
public:
    using Error::Error;
};

/// An operation was called on input violating its precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Right-hand side of a singular system is not in the range of the operator.
class InconsistentSystemError : public Error {
public:
    using Error::Error;
};

/// Integer argument outside the supported domain (e.g. step count k = 0).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A linear solve failed; carries the condition estimate of the system.
class NumericalError : public Error {
public:
    NumericalError(const std::string& what, double condition_estimate)
        : Error(what), condition_estimate_(condition_estimate) {}

    double condition_estimate() const { return condition_estimate_; }

private:
    double condition_estimate_;
};

}  // namespace netid
