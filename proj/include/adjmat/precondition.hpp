#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adjmat/errors.hpp"
#include "adjmat/matrix.hpp"
#include "adjmat/paradj.hpp"
#include "adjmat/rng.hpp"

namespace adjmat {

/// How a matrix was prepared before the block recursion ran on it.
template <Domain R>
struct PreconditionRecord {
    std::size_t original_order = 0;
    std::size_t padded_order = 0;
    Matrix<R> transform;       // unimodular U actually used (identity on first try)
    std::uint64_t seed = 0;    // base seed the retry sequence was derived from
    int attempts = 0;          // par_adj runs performed, including the successful one
};

template <Domain R>
struct AdjAnyResult {
    R det;
    Matrix<R> adj;             // adjugate of the original matrix
    PreconditionRecord<R> record;
    RunStats stats;            // counters of the successful attempt only
};

/// Embed a square matrix as the top-left block of diag(A, I) whose order is
/// the least power of two >= max(2, order(A)). Determinant is unchanged and
/// the adjugate of A is the top-left block of the adjugate of the result.
template <Domain R>
Matrix<R> pad_to_power_of_two(const Matrix<R>& a) {
    if (!a.square()) throw DimensionError("pad_to_power_of_two: matrix must be square");
    const std::size_t n0 = a.rows();
    std::size_t np = std::bit_ceil(n0);
    if (np < 2) np = 2;
    if (np == n0) return a;
    const R zero = zero_like(a.at(0, 0));
    const R one = one_like(a.at(0, 0));
    std::vector<R> e(np * np, zero);
    for (std::size_t i = 0; i < n0; ++i)
        for (std::size_t j = 0; j < n0; ++j) e[i * np + j] = a.at(i, j);
    for (std::size_t i = n0; i < np; ++i) e[i * np + i] = one;
    return Matrix<R>(np, np, std::move(e));
}

/// Random unimodular matrix, a product of elementary row additions
/// (I + c * E_ij, i != j, |c| <= entry_bound), so its determinant is
/// exactly one in any domain. `like` fixes the domain of the entries; the
/// coefficients themselves are small integers.
///
/// By default the product is a complete lower-triangular sweep followed by
/// a complete upper-triangular sweep (a unit L times a unit V with random
/// entries). That keeps every leading minor of the result equal to one and
/// makes the matrix dense; sparse transforms leave far too many of the
/// recursion's deep block minors singular. Passing `ops` instead applies
/// that many single row additions at random positions with nonzero random
/// coefficients (ops = 0 gives the identity).
template <Domain R>
Matrix<R> random_unimodular(std::size_t order, std::uint64_t seed, const R& like,
                            long long entry_bound = 2,
                            std::optional<std::size_t> ops = std::nullopt) {
    if (order == 0) throw DimensionError("random_unimodular: order must be positive");
    if (entry_bound < 1) throw Error("random_unimodular: entry_bound must be >= 1");
    const R zero = zero_like(like);
    const R one = one_like(like);
    std::vector<R> w(order * order, zero);
    for (std::size_t i = 0; i < order; ++i) w[i * order + i] = one;
    if (order == 1) return Matrix<R>(1, 1, std::move(w));
    Rng rng(seed);
    if (ops) {
        for (std::size_t k = 0; k < *ops; ++k) {
            const std::size_t i = static_cast<std::size_t>(rng.below(order));
            std::size_t j = static_cast<std::size_t>(rng.below(order - 1));
            if (j >= i) ++j;
            const R c = from_int_like(rng.nonzero(entry_bound), like);
            for (std::size_t col = 0; col < order; ++col)
                w[i * order + col] = w[i * order + col] + c * w[j * order + col];
        }
        return Matrix<R>(order, order, std::move(w));
    }
    std::vector<R> lo(order * order, zero);
    std::vector<R> up(order * order, zero);
    for (std::size_t i = 0; i < order; ++i) {
        lo[i * order + i] = one;
        up[i * order + i] = one;
        for (std::size_t j = 0; j < i; ++j)
            lo[i * order + j] = from_int_like(rng.in_range(-entry_bound, entry_bound), like);
        for (std::size_t j = i + 1; j < order; ++j)
            up[i * order + j] = from_int_like(rng.in_range(-entry_bound, entry_bound), like);
    }
    return mat_mul(Matrix<R>(order, order, std::move(lo)),
                   Matrix<R>(order, order, std::move(up)));
}

/// Adjugate and determinant of any square matrix, via the block recursion.
///
/// The input is padded to a power-of-two order. The first attempt runs on
/// the padded matrix directly; if the recursion hits a singular leading
/// block it is retried on U * P for a fresh random unimodular U, and the
/// adjugate of P is recovered as adj(U * P) * U. Retries are deterministic
/// in `seed`. After 1 + max_retries failed attempts RetriesExhausted is
/// thrown; matrices that are themselves singular can still succeed (the
/// determinant comes back zero and the adjugate is still well defined).
template <Domain R>
AdjAnyResult<R> adj_any(const Matrix<R>& a, int max_retries = 8, std::uint64_t seed = 0,
                        const ParAdjOptions<R>& opt = {}, TraceNode<R>* trace = nullptr) {
    if (!a.square()) throw DimensionError("adj_any: matrix must be square");
    if (max_retries < 0) throw Error("adj_any: max_retries must be >= 0");
    const Matrix<R> p = pad_to_power_of_two(a);
    const std::size_t n0 = a.rows();
    const std::size_t np = p.rows();
    const R one = one_like(a.at(0, 0));

    const int total = 1 + max_retries;
    for (int attempt = 0; attempt < total; ++attempt) {
        const bool plain = attempt == 0;
        // widen the coefficient range on later retries: tiny coefficients keep
        // growth mild but leave deep block minors singular too often
        Matrix<R> u = plain ? identity_like<R>(np, a.at(0, 0))
                            : random_unimodular(np, derive_seed(seed, static_cast<std::uint64_t>(attempt)), a.at(0, 0),
                                                1 + attempt);
        Matrix<R> w = plain ? p : mat_mul(u, p);
        if (trace) *trace = TraceNode<R>{};
        AdjResult<R> res{};
        try {
            res = par_adj(w, one, opt, trace);
        } catch (const DegenerateMinor&) {
            continue;
        }
        Matrix<R> adj_p = plain ? std::move(res.adj) : mat_mul(res.adj, u);
        Matrix<R> adj_a = np == n0 ? std::move(adj_p) : block(adj_p, 0, 0, n0, n0);
        PreconditionRecord<R> rec{n0, np, std::move(u), seed, attempt + 1};
        return AdjAnyResult<R>{std::move(res.phi), std::move(adj_a), std::move(rec),
                               res.stats};
    }
    throw RetriesExhausted("adj_any: recursion hit a singular leading block in all " +
                               std::to_string(total) + " attempts",
                           total);
}

} // namespace adjmat
