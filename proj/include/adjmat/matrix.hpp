#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "adjmat/domain.hpp"
#include "adjmat/errors.hpp"
#include "adjmat/stats.hpp"

namespace adjmat {

/// Dense row-major matrix over a commutative domain. Matrices are
/// immutable after construction: every operation returns a fresh value,
/// which makes concurrent reads and transfers between tasks safe without
/// further discipline. All entries must belong to one domain.
template <Domain R>
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols, std::vector<R> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (rows_ == 0 || cols_ == 0)
            throw DimensionError("matrix: empty dimensions");
        if (e_.size() != rows_ * cols_)
            throw DimensionError("matrix: entry count " + std::to_string(e_.size()) +
                                 " does not match " + std::to_string(rows_) + "x" +
                                 std::to_string(cols_));
        for (const R& x : e_)
            if (!same_domain(x, e_.front()))
                throw DomainMismatch("matrix: entries from different domains");
    }

    static Matrix from_rows(const std::vector<std::vector<R>>& rows) {
        if (rows.empty() || rows.front().empty())
            throw DimensionError("from_rows: empty input");
        const std::size_t cols = rows.front().size();
        std::vector<R> entries;
        entries.reserve(rows.size() * cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw DimensionError("from_rows: ragged row " + std::to_string(i) +
                                     " (expected " + std::to_string(cols) +
                                     " entries, got " +
                                     std::to_string(rows[i].size()) + ")");
            for (const R& x : rows[i]) entries.push_back(x);
        }
        return Matrix(rows.size(), cols, std::move(entries));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return e_.empty(); }
    bool square() const { return rows_ == cols_ && rows_ > 0; }

    const R& at(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_)
            throw DimensionError("matrix access (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ") out of range for " +
                                 std::to_string(rows_) + "x" + std::to_string(cols_));
        return e_[i * cols_ + j];
    }
    const R& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

    const std::vector<R>& entries() const { return e_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<R> e_;
};

/// The four equal quadrants of an even-order square matrix, in the block
/// layout [[a, c], [b, d]]: a top-left, c top-right, b bottom-left,
/// d bottom-right.
template <Domain R>
struct Blocks {
    Matrix<R> a, c, b, d;
};

template <Domain R>
Matrix<R> block(const Matrix<R>& m, std::size_t row0, std::size_t col0,
                std::size_t rows, std::size_t cols) {
    if (row0 + rows > m.rows() || col0 + cols > m.cols())
        throw DimensionError("block: out of range");
    std::vector<R> e;
    e.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) e.push_back(m.at(row0 + i, col0 + j));
    return Matrix<R>(rows, cols, std::move(e));
}

template <Domain R>
Blocks<R> split_blocks(const Matrix<R>& m) {
    if (!m.square())
        throw DimensionError("split_blocks: matrix must be square");
    if (m.rows() % 2 != 0)
        throw DimensionError("split_blocks: order " + std::to_string(m.rows()) +
                             " is odd");
    const std::size_t n = m.rows() / 2;
    return Blocks<R>{block(m, 0, 0, n, n), block(m, 0, n, n, n),
                     block(m, n, 0, n, n), block(m, n, n, n, n)};
}

template <Domain R>
Matrix<R> join_blocks(const Matrix<R>& a, const Matrix<R>& c, const Matrix<R>& b,
                      const Matrix<R>& d) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.rows() != n || b.cols() != n || c.rows() != n ||
        c.cols() != n || d.rows() != n || d.cols() != n)
        throw DimensionError("join_blocks: blocks must be square and equal-sized");
    std::vector<R> e;
    e.reserve(4 * n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) e.push_back(a.at(i, j));
        for (std::size_t j = 0; j < n; ++j) e.push_back(c.at(i, j));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) e.push_back(b.at(i, j));
        for (std::size_t j = 0; j < n; ++j) e.push_back(d.at(i, j));
    }
    return Matrix<R>(2 * n, 2 * n, std::move(e));
}

/// Classical cubic multiplication. When `stats` is given, increments its
/// matmul_count by one; counters are per-task, never shared across threads.
template <Domain R>
Matrix<R> mat_mul(const Matrix<R>& x, const Matrix<R>& y, RunStats* stats = nullptr) {
    if (x.cols() != y.rows())
        throw DimensionError("mat_mul: inner dimensions " + std::to_string(x.cols()) +
                             " and " + std::to_string(y.rows()) + " disagree");
    const std::size_t rows = x.rows(), cols = y.cols(), inner = x.cols();
    std::vector<R> e;
    e.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            R sum = x.at(i, 0) * y.at(0, j);
            for (std::size_t k = 1; k < inner; ++k) sum += x.at(i, k) * y.at(k, j);
            e.push_back(std::move(sum));
        }
    }
    if (stats) ++stats->matmul_count;
    return Matrix<R>(rows, cols, std::move(e));
}

template <Domain R>
Matrix<R> mat_add(const Matrix<R>& x, const Matrix<R>& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw DimensionError("mat_add: dimension mismatch");
    std::vector<R> e;
    e.reserve(x.entries().size());
    for (std::size_t k = 0; k < x.entries().size(); ++k)
        e.push_back(x.entries()[k] + y.entries()[k]);
    return Matrix<R>(x.rows(), x.cols(), std::move(e));
}

template <Domain R>
Matrix<R> mat_sub(const Matrix<R>& x, const Matrix<R>& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw DimensionError("mat_sub: dimension mismatch");
    std::vector<R> e;
    e.reserve(x.entries().size());
    for (std::size_t k = 0; k < x.entries().size(); ++k)
        e.push_back(x.entries()[k] - y.entries()[k]);
    return Matrix<R>(x.rows(), x.cols(), std::move(e));
}

template <Domain R>
Matrix<R> mat_neg(const Matrix<R>& x) {
    std::vector<R> e;
    e.reserve(x.entries().size());
    for (const R& v : x.entries()) e.push_back(-v);
    return Matrix<R>(x.rows(), x.cols(), std::move(e));
}

template <Domain R>
Matrix<R> scalar_mul(const R& s, const Matrix<R>& x) {
    std::vector<R> e;
    e.reserve(x.entries().size());
    for (const R& v : x.entries()) e.push_back(s * v);
    return Matrix<R>(x.rows(), x.cols(), std::move(e));
}

/// Entrywise exact quotient. Throws NotDivisible carrying the coordinates
/// of the first offending entry. When `stats` is given, adds one exact
/// division per entry.
template <Domain R>
Matrix<R> scalar_exact_div(const Matrix<R>& x, const R& s, RunStats* stats = nullptr) {
    if (is_zero(s)) throw DivisionByZero("scalar_exact_div: division by zero");
    std::vector<R> e;
    e.reserve(x.entries().size());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
            try {
                e.push_back(exact_div(x.at(i, j), s));
            } catch (const NotDivisible&) {
                throw NotDivisible("scalar_exact_div: entry (" + std::to_string(i) +
                                       "," + std::to_string(j) + ") = " +
                                       to_text(x.at(i, j)) +
                                       " is not divisible by " + to_text(s),
                                   i, j);
            }
        }
    }
    if (stats) stats->exact_div_count += x.rows() * x.cols();
    return Matrix<R>(x.rows(), x.cols(), std::move(e));
}

template <Domain R>
Matrix<R> identity_like(std::size_t n, const R& like) {
    if (n == 0) throw DimensionError("identity: order must be at least 1");
    std::vector<R> e(n * n, zero_like(like));
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = one_like(like);
    return Matrix<R>(n, n, std::move(e));
}

template <Domain R>
    requires std::constructible_from<R, long long>
Matrix<R> identity(std::size_t n) {
    return identity_like(n, R(1));
}

template <Domain R>
bool is_scalar_multiple_of_identity(const Matrix<R>& x, const R& s) {
    if (!x.square()) return false;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            if (i == j ? !(x.at(i, j) == s) : !is_zero(x.at(i, j))) return false;
    return true;
}

template <Domain R>
Matrix<R> transpose(const Matrix<R>& x) {
    std::vector<R> e;
    e.reserve(x.entries().size());
    for (std::size_t j = 0; j < x.cols(); ++j)
        for (std::size_t i = 0; i < x.rows(); ++i) e.push_back(x.at(i, j));
    return Matrix<R>(x.cols(), x.rows(), std::move(e));
}

/// One text line per row, entries separated by single spaces, in the
/// canonical element grammar.
template <Domain R>
std::vector<std::string> format_rows(const Matrix<R>& x) {
    std::vector<std::string> lines;
    lines.reserve(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        std::string line;
        for (std::size_t j = 0; j < x.cols(); ++j) {
            if (j > 0) line += ' ';
            line += to_text(x.at(i, j));
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

/// All rows joined with newlines (no trailing newline).
template <Domain R>
std::string format_matrix(const Matrix<R>& x) {
    std::string out;
    const auto lines = format_rows(x);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i > 0) out += '\n';
        out += lines[i];
    }
    return out;
}

} // namespace adjmat
