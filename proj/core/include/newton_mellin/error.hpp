#pragma once

#include <stdexcept>
#include <string>

namespace nm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact rational arithmetic left the 64-bit range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// A precondition on the arguments of an operation was violated
/// (wrong side, not fiber class, outside a convergence strip, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A numerical routine failed to reach its tolerance.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Malformed expansion text. Carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace nm
