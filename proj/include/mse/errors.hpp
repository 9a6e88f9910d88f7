#pragma once

#include <stdexcept>
#include <string>

namespace mse {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad parameters: out-of-range n_p, A < 1, M < 1, empty seed list, ...
class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error(what) {}
};

// Malformed dataset: ragged rows, empty point set, non-finite coordinates.
class InvalidDataset : public Error {
public:
    explicit InvalidDataset(const std::string& what) : Error(what) {}
};

// No admissible A produces exactly K partial clusters under the given (M, D).
// Carries the achievable counts bracketing K so callers can report them.
class KUnachievable : public Error {
public:
    KUnachievable(const std::string& what, int below, int above, bool approximate)
        : Error(what), count_below(below), count_above(above), approximate(approximate) {}

    int count_below;   // closest achievable count <= requested K (-1 if none seen)
    int count_above;   // closest achievable count >= requested K (-1 if none seen)
    bool approximate;  // true when raised by the ladder search
};

// CSV parsing failure with 1-based row and column of the offending cell.
class ParseError : public Error {
public:
    ParseError(const std::string& what, long row, long col)
        : Error(what + " (row " + std::to_string(row) + ", column " + std::to_string(col) + ")"),
          row(row), col(col) {}

    long row;
    long col;
};

// Filesystem-level failure (missing file, unwritable output path).
class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace mse
