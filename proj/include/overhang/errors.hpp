#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace overhang {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two block interiors intersect. Indices are 1-based, in canonical order.
struct OverlapError : Error {
    std::size_t first, second;
    OverlapError(std::size_t i, std::size_t j)
        : Error("blocks " + std::to_string(i) + " and " + std::to_string(j) +
                " overlap"),
          first(i), second(j) {}
};

/// A point weight rests neither on a block top nor on the table.
struct DanglingWeightError : Error {
    std::size_t weight;
    explicit DanglingWeightError(std::size_t w)
        : Error("point weight " + std::to_string(w) + " rests on nothing"),
          weight(w) {}
};

struct InvalidStackError : Error {
    using Error::Error;
};

struct EmptyStackError : Error {
    EmptyStackError() : Error("stack has no blocks") {}
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

struct ZeroMassError : Error {
    ZeroMassError() : Error("distribution has zero total mass") {}
};

/// A move would create negative mass; signals an invalid step in a trace.
struct NotApplicableError : Error {
    using Error::Error;
};

struct NotBalancedError : Error {
    using Error::Error;
};

struct IndexError : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t line, column;
    ParseError(std::size_t ln, std::size_t col, const std::string& what)
        : Error("line " + std::to_string(ln) + ", column " +
                std::to_string(col) + ": " + what),
          line(ln), column(col) {}
};

} // namespace overhang
