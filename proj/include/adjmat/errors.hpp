#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace adjmat {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mixing elements of different domains (integer vs polynomial, or
/// polynomials in different variables) in one operation.
class DomainMismatch : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// Exact division was requested but the divisor does not divide the
/// dividend. Inside the adjugate recursion this always signals a violated
/// precondition or a bug, never an expected condition, so it carries
/// enough context to locate the failing entry.
class NotDivisible : public Error {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    explicit NotDivisible(const std::string& what, std::size_t row = npos,
                          std::size_t col = npos)
        : Error(what), row_(row), col_(col) {}

    bool has_position() const { return row_ != npos; }
    std::size_t row() const { return row_; }
    std::size_t col() const { return col_; }

private:
    std::size_t row_;
    std::size_t col_;
};

/// Malformed element text or matrix file. `position` is a byte offset into
/// the offending string (element grammar) or 0 when not applicable.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, std::size_t position = 0)
        : Error(what), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Shape violations: ragged rows, empty input, size mismatch, odd order.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A block determinant used as a divisor came out zero at some level of
/// the recursion. `level` is the recursion depth (0 = outermost call) and
/// `block` identifies which half ('A' top-left or 'B' bottom-left).
class DegenerateMinor : public Error {
public:
    DegenerateMinor(const std::string& what, int level, char block)
        : Error(what), level_(level), block_(block) {}

    int level() const { return level_; }
    char block() const { return block_; }

private:
    int level_;
    char block_;
};

/// Every preconditioning attempt hit a DegenerateMinor.
class RetriesExhausted : public Error {
public:
    explicit RetriesExhausted(const std::string& what, int attempts = 0)
        : Error(what), attempts_(attempts) {}

    int attempts() const { return attempts_; }

private:
    int attempts_;
};

} // namespace adjmat
