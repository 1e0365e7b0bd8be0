#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pbes {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A right-hand side is not a disjunction of `guard && call` clauses.
class NotDisjunctive : public Error {
public:
    using Error::Error;
};

/// Reference to an undeclared predicate or data variable.
class NotClosed : public Error {
public:
    using Error::Error;
};

class SortMismatch : public Error {
public:
    using Error::Error;
};

/// A value lies outside the declared data domain (e.g. negative for Nat).
class DomainError : public Error {
public:
    using Error::Error;
};

class ArithmeticOverflow : public Error {
public:
    using Error::Error;
};

/// A partition block entails neither a guard nor its negation.
class InvariantBroken : public Error {
public:
    using Error::Error;
};

/// A clause image is not contained in exactly one target block.
class NotCongruent : public Error {
public:
    using Error::Error;
};

/// No block of a partition contains a value; the partition invariant is violated.
class Unreachable : public Error {
public:
    using Error::Error;
};

class GraphFormatError : public Error {
public:
    using Error::Error;
};

/// A concretized proof-graph step failed one of its checks.
class StepViolation : public Error {
public:
    StepViolation(std::size_t step, std::string check, const std::string& detail)
        : Error("step " + std::to_string(step) + ": " + check + " check failed: " + detail),
          step_(step), check_(std::move(check)) {}

    [[nodiscard]] std::size_t step() const noexcept { return step_; }
    [[nodiscard]] const std::string& check() const noexcept { return check_; }

private:
    std::size_t step_;
    std::string check_;
};

} // namespace pbes
