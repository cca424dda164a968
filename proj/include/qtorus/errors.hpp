#pragma once

#include <stdexcept>
#include <string>

namespace qtorus {

/// Base class for every error raised by the engine. Deep computations never
/// crash; they throw one of the types below and the caller (CLI, probes)
/// maps it to a report or exit code.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Division by the zero scalar.
class DivisionByZeroError : public Error {
public:
    DivisionByZeroError() : Error("division by zero scalar") {}
};

/// A monomial is not valid in the module space it was used in
/// (e.g. a negative exponent at a non-distinguished index).
class SpaceValidityError : public Error {
public:
    explicit SpaceValidityError(const std::string& msg) : Error(msg) {}
};

/// An operation's structural precondition failed (named in the message).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

/// An inverse generator was used against the wrong distinguished index,
/// or in a space that has none.
class InverseMismatchError : public Error {
public:
    explicit InverseMismatchError(const std::string& msg) : Error(msg) {}
};

/// weight_of was asked for the weight of a non-eigenvector.
class NotWeightVectorError : public Error {
public:
    explicit NotWeightVectorError(const std::string& msg) : Error(msg) {}
};

/// The twisting series failed to terminate within its nilpotency bound.
/// Mathematically unreachable; indicates an internal bug.
class NilpotencyBoundError : public Error {
public:
    explicit NilpotencyBoundError(const std::string& msg) : Error(msg) {}
};

/// Expression syntax error, with 1-based line/column and what was expected.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& msg)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace qtorus
