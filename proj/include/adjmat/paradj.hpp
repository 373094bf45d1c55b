#pragma once

#include <bit>
#include <functional>
#include <future>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "adjmat/domain.hpp"
#include "adjmat/errors.hpp"
#include "adjmat/matrix.hpp"
#include "adjmat/stats.hpp"

namespace adjmat {

// Block-recursive computation of the scaled determinant and scaled
// adjugate over a commutative domain. For an input of order 2n with scale
// gamma (every order-k minor divisible by gamma^(k-1)), par_adj returns
//
//   phi = gamma^(1-2n) det(A)   and   adj = gamma^(2-2n) A*,
//
// so with gamma = 1 these are the determinant and the adjugate proper.
// All interior divisions are exact; a failed division signals a violated
// precondition or a bug and raises NotDivisible.
//
// One composite step forms a five-stage task DAG; items within a stage
// are mutually independent, stages are barriers:
//
//   stage 1:  recurse on A  ||  recurse on B          (alpha, beta, A*, B*)
//   stage 2:  N = B*D/gamma  ||  M = A*C/gamma,  then F = alpha N - beta M
//   stage 3:  recurse on F with scale alpha*beta      (phi, F*)
//   stage 4:  phi' = phi/gamma  ||  H = F*A*/(alpha gamma)
//                               ||  L = F*B*/(beta gamma)
//   stage 5:  H' = (phi' A* + M H)/alpha  ||  L' = -M L/alpha
//
//   result: { phi', [[H', L'], [-H, L]] }
//
// Per step that is 6 matrix multiplications and 3 recursive calls, with 3
// multiplication stages and 2 recursion stages on the critical path. The
// base case (order 2) returns { (ad - cb)/gamma, [[d, -c], [-b, a]] }.

enum class ExecMode { sequential, parallel };

inline std::string_view mode_name(ExecMode m) {
    return m == ExecMode::sequential ? "seq" : "par";
}

template <Domain R>
struct AdjResult {
    R phi;          // gamma^(1-2n) det
    Matrix<R> adj;  // gamma^(2-2n) adjugate
    RunStats stats;
};

/// Named intermediates of one recursion step, recorded when a trace is
/// requested. Children are populated only with deep_trace; a parallel run
/// fills sibling subtrees from separate tasks, which is safe because the
/// nodes are disjoint and joined before being read.
template <Domain R>
struct TraceNode {
    bool base_case = false;
    Matrix<R> input;
    R gamma{};
    R alpha{}, beta{}, phi{}, phi_prime{};
    Matrix<R> a_star, b_star, n, m, f, f_star, h, l, h_prime, l_prime;
    std::unique_ptr<TraceNode> sub_a, sub_b, sub_f;

    /// Walks this node and any recorded children, composite steps only.
    template <class Fn>
    void visit(Fn&& fn) const {
        if (!base_case) fn(*this);
        for (const auto* child : {sub_a.get(), sub_b.get(), sub_f.get()})
            if (child) child->visit(fn);
    }
};

template <Domain R>
struct ParAdjOptions {
    ExecMode mode = ExecMode::parallel;
    /// Record the whole recursion tree in the trace, not just the root step.
    bool deep_trace = false;
    /// Swappable multiplication strategy; empty means classical mat_mul.
    std::function<Matrix<R>(const Matrix<R>&, const Matrix<R>&)> multiply;
};

namespace detail {

template <class FA, class FB>
auto run_pair(ExecMode mode, FA fa, FB fb) {
    using RA = decltype(fa());
    using RB = decltype(fb());
    if (mode == ExecMode::parallel) {
        std::future<RB> second = std::async(std::launch::async, std::move(fb));
        RA first = fa();
        return std::pair<RA, RB>(std::move(first), second.get());
    }
    RA first = fa();
    RB second = fb();
    return std::pair<RA, RB>(std::move(first), std::move(second));
}

template <Domain R>
struct ParAdjCtx {
    const ParAdjOptions<R>& opt;

    Matrix<R> mul(const Matrix<R>& x, const Matrix<R>& y, RunStats& s) const {
        if (opt.multiply) {
            Matrix<R> r = opt.multiply(x, y);
            ++s.matmul_count;
            return r;
        }
        return mat_mul(x, y, &s);
    }
};

template <Domain R>
AdjResult<R> par_adj_rec(const Matrix<R>& a, const R& gamma, const ParAdjCtx<R>& ctx,
                         int level, TraceNode<R>* tr) {
    const std::size_t order = a.rows();
    if (tr) {
        tr->input = a;
        tr->gamma = gamma;
    }

    if (order == 2) {
        RunStats st;
        st.recursion_calls = 1;
        st.critical_path_stages = 1;
        R det = a.at(0, 0) * a.at(1, 1) - a.at(1, 0) * a.at(0, 1);
        R phi = exact_div(det, gamma);
        ++st.exact_div_count;
        Matrix<R> adj(2, 2, {a.at(1, 1), -a.at(0, 1), -a.at(1, 0), a.at(0, 0)});
        if (tr) {
            tr->base_case = true;
            tr->phi = phi;
            tr->phi_prime = phi;
        }
        return AdjResult<R>{std::move(phi), std::move(adj), st};
    }

    const Blocks<R> blk = split_blocks(a);
    TraceNode<R>* tr_a = nullptr;
    TraceNode<R>* tr_b = nullptr;
    TraceNode<R>* tr_f = nullptr;
    if (tr && ctx.opt.deep_trace) {
        tr->sub_a = std::make_unique<TraceNode<R>>();
        tr->sub_b = std::make_unique<TraceNode<R>>();
        tr->sub_f = std::make_unique<TraceNode<R>>();
        tr_a = tr->sub_a.get();
        tr_b = tr->sub_b.get();
        tr_f = tr->sub_f.get();
    }

    // stage 1: the two independent half-order recursions
    auto [res_a, res_b] = run_pair(
        ctx.opt.mode,
        [&] { return par_adj_rec(blk.a, gamma, ctx, level + 1, tr_a); },
        [&] { return par_adj_rec(blk.b, gamma, ctx, level + 1, tr_b); });
    const R& alpha = res_a.phi;
    const R& beta = res_b.phi;
    if (is_zero(alpha))
        throw DegenerateMinor("block determinant alpha vanished at recursion level " +
                                  std::to_string(level),
                              level, 'A');
    if (is_zero(beta))
        throw DegenerateMinor("block determinant beta vanished at recursion level " +
                                  std::to_string(level),
                              level, 'B');

    // stage 2: N || M, then F
    auto [nr, mr] = run_pair(
        ctx.opt.mode,
        [&] {
            RunStats s;
            Matrix<R> n = scalar_exact_div(ctx.mul(res_b.adj, blk.d, s), gamma, &s);
            return std::pair<Matrix<R>, RunStats>(std::move(n), s);
        },
        [&] {
            RunStats s;
            Matrix<R> m = scalar_exact_div(ctx.mul(res_a.adj, blk.c, s), gamma, &s);
            return std::pair<Matrix<R>, RunStats>(std::move(m), s);
        });
    const Matrix<R>& n_mat = nr.first;
    const Matrix<R>& m_mat = mr.first;
    const Matrix<R> f = mat_sub(scalar_mul(alpha, n_mat), scalar_mul(beta, m_mat));

    // stage 3: the dependent recursion on F with scale alpha*beta
    AdjResult<R> res_f = par_adj_rec(f, R(alpha * beta), ctx, level + 1, tr_f);

    // stage 4: phi' || H || L
    auto [hr, lr] = run_pair(
        ctx.opt.mode,
        [&] {
            RunStats s;
            Matrix<R> h =
                scalar_exact_div(ctx.mul(res_f.adj, res_a.adj, s), R(alpha * gamma), &s);
            R phi_prime = exact_div(res_f.phi, gamma);
            ++s.exact_div_count;
            return std::tuple<Matrix<R>, R, RunStats>(std::move(h),
                                                      std::move(phi_prime), s);
        },
        [&] {
            RunStats s;
            Matrix<R> l =
                scalar_exact_div(ctx.mul(res_f.adj, res_b.adj, s), R(beta * gamma), &s);
            return std::pair<Matrix<R>, RunStats>(std::move(l), s);
        });
    const Matrix<R>& h = std::get<0>(hr);
    const R& phi_prime = std::get<1>(hr);
    const Matrix<R>& l = lr.first;

    // stage 5: H' || L'
    auto [hpr, lpr] = run_pair(
        ctx.opt.mode,
        [&] {
            RunStats s;
            Matrix<R> hp = scalar_exact_div(
                mat_add(scalar_mul(phi_prime, res_a.adj), ctx.mul(m_mat, h, s)), alpha,
                &s);
            return std::pair<Matrix<R>, RunStats>(std::move(hp), s);
        },
        [&] {
            RunStats s;
            Matrix<R> lp =
                scalar_exact_div(mat_neg(ctx.mul(m_mat, l, s)), alpha, &s);
            return std::pair<Matrix<R>, RunStats>(std::move(lp), s);
        });

    Matrix<R> adj = join_blocks(hpr.first, lpr.first, mat_neg(h), l);

    RunStats st;
    st.recursion_calls = 1;
    st.absorb_costs(res_a.stats);
    st.absorb_costs(res_b.stats);
    st.absorb_costs(res_f.stats);
    st.absorb_costs(nr.second);
    st.absorb_costs(mr.second);
    st.absorb_costs(std::get<2>(hr));
    st.absorb_costs(lr.second);
    st.absorb_costs(hpr.second);
    st.absorb_costs(lpr.second);
    st.critical_path_stages =
        std::max(res_a.stats.critical_path_stages, res_b.stats.critical_path_stages) +
        res_f.stats.critical_path_stages + 3;

    if (tr) {
        tr->alpha = alpha;
        tr->beta = beta;
        tr->a_star = res_a.adj;
        tr->b_star = res_b.adj;
        tr->n = n_mat;
        tr->m = m_mat;
        tr->f = f;
        tr->phi = res_f.phi;
        tr->f_star = res_f.adj;
        tr->h = h;
        tr->l = l;
        tr->h_prime = hpr.first;
        tr->l_prime = lpr.first;
        tr->phi_prime = phi_prime;
    }
    return AdjResult<R>{phi_prime, std::move(adj), st};
}

} // namespace detail

/// Entry point. `a` must be square of power-of-two order >= 2 and `gamma`
/// nonzero; every order-k minor of `a` must be divisible by gamma^(k-1)
/// and every block determinant met by the recursion must be nonzero
/// (DegenerateMinor otherwise; callers that cannot guarantee this should
/// go through adj_any, which retries with a fresh preconditioner).
template <Domain R>
AdjResult<R> par_adj(const Matrix<R>& a, const R& gamma,
                     const ParAdjOptions<R>& opt = {}, TraceNode<R>* trace = nullptr) {
    if (!a.square())
        throw DimensionError("par_adj: matrix must be square");
    const auto order = static_cast<unsigned long long>(a.rows());
    if (order < 2 || !std::has_single_bit(order))
        throw DimensionError("par_adj: order " + std::to_string(a.rows()) +
                             " is not a power of two >= 2");
    if (is_zero(gamma))
        throw DivisionByZero("par_adj: gamma must be nonzero");
    detail::ParAdjCtx<R> ctx{opt};
    return detail::par_adj_rec(a, gamma, ctx, 0, trace);
}

template <Domain R>
AdjResult<R> par_adj_with_mode(const Matrix<R>& a, const R& gamma, ExecMode mode) {
    ParAdjOptions<R> opt;
    opt.mode = mode;
    return par_adj(a, gamma, opt);
}

} // namespace adjmat
