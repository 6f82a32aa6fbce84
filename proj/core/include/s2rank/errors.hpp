#pragma once

#include <stdexcept>
#include <string>

namespace s2rank {

/// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonSquareError : public Error {
public:
    using Error::Error;
};

class OutOfBoundsError : public Error {
public:
    using Error::Error;
};

/// The all-zero family: the rank test is defined only for nonzero families.
class ZeroFamilyError : public Error {
public:
    using Error::Error;
};

/// A window (i, j] of X carries zero probability mass.
class ZeroPairMassError : public Error {
public:
    using Error::Error;
};

/// lambda_{i,j} * v_{i,j} != p_j - p_i for the named pair.
class CocycleViolationError : public Error {
public:
    CocycleViolationError(int i, int j, const std::string& what)
        : Error(what), i_(i), j_(j) {}
    int pair_i() const { return i_; }
    int pair_j() const { return j_; }

private:
    int i_;
    int j_;
};

/// Cofactor expansion refuses matrices above its size cap.
class TooLargeError : public Error {
public:
    using Error::Error;
};

/// Malformed table text. line/column are 1-based; column counts fields.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& what)
        : Error("line " + std::to_string(line) + ", field " + std::to_string(column) +
                ": " + what),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Header row is not the canonical pair (or x-value) sequence.
class BadHeaderError : public ParseError {
public:
    using ParseError::ParseError;
};

} // namespace s2rank
