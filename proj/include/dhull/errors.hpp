#pragma once

#include <stdexcept>
#include <string>

namespace dhull {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotSimpleError : Error {
    explicit NotSimpleError(const std::string& msg) : Error(msg) {}
};

struct DegenerateError : Error {
    explicit DegenerateError(const std::string& msg) : Error(msg) {}
};

struct OutOfRangeError : Error {
    explicit OutOfRangeError(const std::string& msg) : Error(msg) {}
};

struct EpsilonNonPositiveError : Error {
    explicit EpsilonNonPositiveError(const std::string& msg) : Error(msg) {}
};

struct DisconnectedError : Error {
    explicit DisconnectedError(const std::string& msg) : Error(msg) {}
};

struct StartNotOnHullError : Error {
    explicit StartNotOnHullError(const std::string& msg) : Error(msg) {}
};

struct NoProgressError : Error {
    explicit NoProgressError(const std::string& msg) : Error(msg) {}
};

struct InfeasibleBudgetError : Error {
    explicit InfeasibleBudgetError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

struct NoPolygonFoundError : Error {
    explicit NoPolygonFoundError(const std::string& msg) : Error(msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

} // namespace dhull
