/**
 * @file errors.hpp
 * @brief Exception types shared across the library.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace tidecal {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument / precondition violation on a public operation.
class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error(what) {}
};

/// Structured-text (CSV / JSON) parsing failure.
class ParseError : public Error {
public:
    enum class Kind {
        BadHeader,
        BadUnit,
        NonMonotonicTime,
        UnparsableRow,
        BadDocument,
        UnknownKey,
    };

    ParseError(Kind kind, const std::string& what, long line = -1)
        : Error(what), kind_(kind), line_(line) {}

    Kind kind() const { return kind_; }
    /// 1-based line number, or -1 when not applicable.
    long line() const { return line_; }

private:
    Kind kind_;
    long line_;
};

/// Input too short for the requested operation.
class TooShort : public Error {
public:
    explicit TooShort(const std::string& what) : Error(what) {}
};

/// Two series have no common time window.
class NoOverlap : public Error {
public:
    explicit NoOverlap(const std::string& what) : Error(what) {}
};

/// Transient solver failed after exhausting time-step halvings.
class SimulationError : public Error {
public:
    SimulationError(const std::string& what, double time)
        : Error(what), time_(time) {}
    double time() const { return time_; }

private:
    double time_;
};

}  // namespace tidecal
