#pragma once

#include <stdexcept>
#include <string>

namespace pefo {

// Base class of all errors thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text; carries a 1-based source position.
class ParseError : public Error {
public:
    ParseError(const std::string& message, int line, int column)
        : Error(message + " (line " + std::to_string(line) + ", column "
                + std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

// A documented size cap was exceeded (shop enumeration, theta construction).
class CapError : public Error {
public:
    using Error::Error;
};

// Structurally well-formed input that violates a semantic precondition.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Raised during formula evaluation: unbound variable, constant out of range.
class EvalError : public Error {
public:
    using Error::Error;
};

} // namespace pefo
