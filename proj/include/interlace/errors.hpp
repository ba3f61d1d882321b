#pragma once

#include <stdexcept>
#include <string>

namespace interlace {

// Base class for all domain errors raised by the library. The CLI maps
// these to exit status 1; anything else is a bug.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text (edge lists, rotation systems, rationals).
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Precondition violations: division by zero, out-of-range vertices,
// forbidden evaluation points, degenerate interpolation nodes, ...
class DomainError : public Error {
public:
    using Error::Error;
};

// An operation was asked to enumerate more state than its configured cap.
class SizeCapError : public Error {
public:
    using Error::Error;
};

} // namespace interlace
