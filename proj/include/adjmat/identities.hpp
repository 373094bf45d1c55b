#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "adjmat/domain.hpp"
#include "adjmat/errors.hpp"
#include "adjmat/matrix.hpp"
#include "adjmat/oracle.hpp"

namespace adjmat {

/// A base matrix with two fixed column positions i < j (0-based). The
/// column-replacement identity is stated in terms of the matrices obtained
/// by substituting given columns at these two positions.
template <Domain R>
struct ColumnReplacement {
    Matrix<R> base;
    std::size_t i = 0;
    std::size_t j = 1;
};

namespace detail {

template <Domain R>
void check_ctx(const ColumnReplacement<R>& ctx) {
    if (!ctx.base.square())
        throw DimensionError("column replacement: base matrix must be square");
    if (ctx.i >= ctx.j || ctx.j >= ctx.base.cols())
        throw DimensionError("column replacement: need positions i < j < order");
}

/// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> idx(k);
    for (std::size_t t = 0; t < k; ++t) idx[t] = t;
    while (true) {
        out.push_back(idx);
        std::size_t t = k;
        while (t-- > 0) {
            if (idx[t] + (k - t) < n) {
                ++idx[t];
                for (std::size_t u = t + 1; u < k; ++u) idx[u] = idx[u - 1] + 1;
                break;
            }
            if (t == 0) return out;
        }
    }
}

} // namespace detail

/// Copy of the base matrix with column i := x and column j := y.
template <Domain R>
Matrix<R> replace_columns(const ColumnReplacement<R>& ctx, const std::vector<R>& x,
                          const std::vector<R>& y) {
    detail::check_ctx(ctx);
    const std::size_t n = ctx.base.rows();
    if (x.size() != n || y.size() != n)
        throw DimensionError("replace_columns: column length must equal the order");
    std::vector<R> e(ctx.base.entries());
    for (std::size_t r = 0; r < n; ++r) {
        e[r * n + ctx.i] = x[r];
        e[r * n + ctx.j] = y[r];
    }
    return Matrix<R>(n, n, std::move(e));
}

/// Column-replacement identity: with B{x,y} denoting the base matrix with
/// its two fixed columns replaced by x and y,
///
///   det B{a,b} * det B{c,d}
///     = det B{a,d} * det B{c,b} - det B{d,b} * det B{a,c}.
///
/// Both sides are evaluated with oracle determinants; the identity holds
/// for every base matrix and every four columns over a commutative ring.
template <Domain R>
bool check_column_replacement(const ColumnReplacement<R>& ctx, const std::vector<R>& a,
                              const std::vector<R>& b, const std::vector<R>& c,
                              const std::vector<R>& d) {
    const auto det = [&](const std::vector<R>& x, const std::vector<R>& y) {
        return det_bareiss(replace_columns(ctx, x, y));
    };
    const R lhs = det(a, b) * det(c, d);
    const R rhs = det(a, d) * det(c, b) - det(d, b) * det(a, c);
    return lhs == rhs;
}

/// Divisibility of the Schur-like combination F = alpha B* D - beta A* C:
/// for a 2n x 2n matrix with blocks [[A, C], [B, D]], alpha = det A != 0
/// and beta = det B != 0, every order-k minor of F is divisible by
/// (alpha*beta)^(k-1). Builds F from oracle adjugates and brute-forces all
/// order-k minors.
template <Domain R>
bool check_f_minor_divisibility(const Matrix<R>& m, std::size_t k) {
    const Blocks<R> blk = split_blocks(m);
    const std::size_t n = blk.a.rows();
    if (k < 1 || k > n)
        throw DimensionError("check_f_minor_divisibility: need 1 <= k <= n");
    const R alpha = det_bareiss(blk.a);
    const R beta = det_bareiss(blk.b);
    if (is_zero(alpha) || is_zero(beta))
        throw Error("check_f_minor_divisibility: degenerate block determinant");

    const Matrix<R> f = mat_sub(scalar_mul(alpha, mat_mul(adj_cofactor(blk.b), blk.d)),
                                scalar_mul(beta, mat_mul(adj_cofactor(blk.a), blk.c)));
    const R divisor = pow_nonneg(alpha * beta, k - 1);
    const auto row_sets = detail::subsets(n, k);
    for (const auto& rows : row_sets)
        for (const auto& cols : row_sets)
            if (!divides(divisor, minor(f, MinorSpec{rows, cols}))) return false;
    return true;
}

/// Sylvester determinant identity: for a square matrix F' of order k >= 3
/// with nonzero corner entry f11, let G be the (k-1)-order matrix of all
/// 2x2 minors of F' containing f11. Then det(F') * f11^(k-2) = det(G).
/// Both sides are evaluated by cofactor expansion.
template <Domain R>
bool check_sylvester(const Matrix<R>& fprime) {
    if (!fprime.square() || fprime.rows() < 3)
        throw DimensionError("check_sylvester: order must be at least 3");
    const std::size_t k = fprime.rows();
    const R& corner = fprime.at(0, 0);
    if (is_zero(corner))
        throw Error("check_sylvester: corner entry is zero");

    std::vector<R> g;
    g.reserve((k - 1) * (k - 1));
    for (std::size_t p = 1; p < k; ++p)
        for (std::size_t q = 1; q < k; ++q)
            g.push_back(corner * fprime.at(p, q) - fprime.at(0, q) * fprime.at(p, 0));
    const Matrix<R> gm(k - 1, k - 1, std::move(g));

    const R lhs = det_cofactor(fprime) * pow_nonneg(corner, k - 2);
    return lhs == det_cofactor(gm);
}

} // namespace adjmat
