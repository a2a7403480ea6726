#pragma once

#include <stdexcept>
#include <string>

namespace plectic {

// Base for all engine errors. Verification drivers catch this and turn it
// into FAIL rows instead of crashing.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two objects live on different coordinate charts.
struct ChartMismatch : Error {
    explicit ChartMismatch(const std::string& msg) : Error(msg) {}
};

// A dimension / arity / degree precondition failed.
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

// Division by a zero polynomial or zero rational.
struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

// Input text did not parse.
struct ParseError : Error {
    ParseError(const std::string& msg, int line, int col)
        : Error(msg + " (line " + std::to_string(line) + ", col " + std::to_string(col) + ")"),
          line(line), col(col) {}
    int line;
    int col;
};

// An operation that needs a pointwise-invertible structure was asked to run
// on one that is degenerate somewhere.
struct DegenerateStructure : Error {
    explicit DegenerateStructure(const std::string& msg) : Error(msg) {}
};

// An operation needs polynomial data but met a genuine rational function.
struct RationalCoefficientUnsupported : Error {
    explicit RationalCoefficientUnsupported(const std::string& msg) : Error(msg) {}
};

}  // namespace plectic
