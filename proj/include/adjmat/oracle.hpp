#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "adjmat/domain.hpp"
#include "adjmat/errors.hpp"
#include "adjmat/matrix.hpp"

namespace adjmat {

/// Row and column index sets selecting a square submatrix. Indices are
/// 0-based, strictly increasing, and the two sets have equal size.
struct MinorSpec {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
};

namespace detail {

template <Domain R>
Matrix<R> delete_row_col(const Matrix<R>& m, std::size_t row, std::size_t col) {
    std::vector<R> e;
    e.reserve((m.rows() - 1) * (m.cols() - 1));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i == row) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j == col) continue;
            e.push_back(m.at(i, j));
        }
    }
    return Matrix<R>(m.rows() - 1, m.cols() - 1, std::move(e));
}

} // namespace detail

/// Determinant by recursive expansion along the first row. Factorial cost;
/// guarded to order <= 10. This is the defining oracle: deliberately
/// simple, shares nothing with the fraction-free routes it checks.
template <Domain R>
R det_cofactor(const Matrix<R>& m) {
    if (!m.square()) throw DimensionError("det_cofactor: matrix must be square");
    if (m.rows() > 10)
        throw DimensionError("det_cofactor: order " + std::to_string(m.rows()) +
                             " exceeds the factorial-cost guard (10)");
    if (m.rows() == 1) return m.at(0, 0);
    R sum = zero_like(m.at(0, 0));
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (is_zero(m.at(0, j))) continue;
        R term = m.at(0, j) * det_cofactor(detail::delete_row_col(m, 0, j));
        sum = (j % 2 == 0) ? sum + term : sum - term;
    }
    return sum;
}

/// Adjugate as the transposed cofactor matrix: entry (i,j) is
/// (-1)^(i+j) det(m with row j and column i deleted). Cofactor
/// determinants are evaluated by det_cofactor, keeping this route fully
/// independent of fraction-free elimination. Guarded to order <= 8.
template <Domain R>
Matrix<R> adj_cofactor(const Matrix<R>& m) {
    if (!m.square()) throw DimensionError("adj_cofactor: matrix must be square");
    if (m.rows() > 8)
        throw DimensionError("adj_cofactor: order " + std::to_string(m.rows()) +
                             " exceeds the factorial-cost guard (8)");
    const std::size_t n = m.rows();
    if (n == 1) return identity_like(1, m.at(0, 0));
    std::vector<R> e;
    e.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            R c = det_cofactor(detail::delete_row_col(m, j, i));
            e.push_back((i + j) % 2 == 0 ? std::move(c) : -c);
        }
    }
    return Matrix<R>(n, n, std::move(e));
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting;
/// the swap sign is tracked. Every interior division is exact by the
/// Sylvester determinant identity, so this works over any domain and any
/// order. Singular input yields zero.
template <Domain R>
R det_bareiss(const Matrix<R>& m) {
    if (!m.square()) throw DimensionError("det_bareiss: matrix must be square");
    const std::size_t n = m.rows();
    std::vector<R> w(m.entries());
    const auto at = [&](std::size_t i, std::size_t j) -> R& { return w[i * n + j]; };

    bool negate = false;
    R prev = one_like(w[0]);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(at(k, k))) {
            std::size_t pivot = k;
            while (pivot < n && is_zero(at(pivot, k))) ++pivot;
            if (pivot == n) return zero_like(w[0]);
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                at(i, j) = exact_div(at(i, j) * at(k, k) - at(i, k) * at(k, j), prev);
            at(i, k) = zero_like(w[0]);
        }
        prev = at(k, k);
    }
    return negate ? -at(n - 1, n - 1) : at(n - 1, n - 1);
}

/// Determinant of the submatrix selected by `spec`, via det_bareiss.
template <Domain R>
R minor(const Matrix<R>& m, const MinorSpec& spec) {
    if (spec.rows.empty() || spec.rows.size() != spec.cols.size())
        throw DimensionError("minor: row/column index sets must be non-empty and "
                             "equal-sized");
    for (const auto& [indices, bound] :
         {std::pair{&spec.rows, m.rows()}, std::pair{&spec.cols, m.cols()}}) {
        for (std::size_t k = 0; k < indices->size(); ++k) {
            if ((*indices)[k] >= bound)
                throw DimensionError("minor: index " +
                                     std::to_string((*indices)[k]) + " out of range");
            if (k > 0 && (*indices)[k] <= (*indices)[k - 1])
                throw DimensionError("minor: indices must be strictly increasing");
        }
    }
    std::vector<R> e;
    e.reserve(spec.rows.size() * spec.cols.size());
    for (std::size_t i : spec.rows)
        for (std::size_t j : spec.cols) e.push_back(m.at(i, j));
    return det_bareiss(Matrix<R>(spec.rows.size(), spec.cols.size(), std::move(e)));
}

} // namespace adjmat
