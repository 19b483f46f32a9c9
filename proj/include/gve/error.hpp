#pragma once

#include <stdexcept>
#include <string>

namespace gve {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad instance data: ill-formed cuts, mismatched value groups, violated
// operation preconditions.
struct ValidationError : Error {
    using Error::Error;
};

// Syntax or semantic error in an instance file; positions are 1-based.
struct ParseError : Error {
    int line;
    int column;
    ParseError(std::string msg, int line_, int col_)
        : Error(std::move(msg)), line(line_), column(col_) {}
};

// An internal iteration or precision cap was hit (exit code 3 at the CLI).
struct BoundExceeded : Error {
    using Error::Error;
};

}  // namespace gve
