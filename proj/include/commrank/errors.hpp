#pragma once

#include <stdexcept>
#include <string>

namespace commrank {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct NonPositiveWeight : Error {
    using Error::Error;
};

struct DuplicateEdge : Error {
    using Error::Error;
};

/// Malformed edge-list input; carries the 1-based line number.
struct ParseError : Error {
    ParseError(int line_number, const std::string& what)
        : Error("line " + std::to_string(line_number) + ": " + what), line(line_number) {}
    int line;
};

struct InvalidParams : Error {
    using Error::Error;
};

/// An iterative computation exceeded its iteration budget.
struct NoConvergence : Error {
    using Error::Error;
};

struct DisconnectedGraph : Error {
    using Error::Error;
};

struct DegenerateGraph : Error {
    using Error::Error;
};

struct InvalidInput : Error {
    using Error::Error;
};

struct UnknownCommunity : Error {
    using Error::Error;
};

struct InvalidPartition : Error {
    using Error::Error;
};

struct EmptyGraph : Error {
    using Error::Error;
};

}  // namespace commrank
