#pragma once

#include <cstdint>

namespace adjmat {

/// Operation counters for one run of the block-recursive adjugate.
/// Counters are accumulated per task and merged at joins, so parallel and
/// sequential schedules of the same computation report identical values.
///
/// critical_path_stages measures the task DAG itself, not any particular
/// schedule: the longest chain of sequentially dependent stages, where a
/// composite step contributes three multiplication stages plus the two
/// recursion stages on its path (the A/B pair, then the F call).
struct RunStats {
    std::uint64_t matmul_count = 0;
    std::uint64_t exact_div_count = 0;
    std::uint64_t recursion_calls = 0;
    std::uint64_t critical_path_stages = 0;

    /// Componentwise sum of the sequential-cost counters; the caller is
    /// responsible for combining critical paths (max over parallel
    /// branches, sum along sequential chains).
    void absorb_costs(const RunStats& o) {
        matmul_count += o.matmul_count;
        exact_div_count += o.exact_div_count;
        recursion_calls += o.recursion_calls;
    }

    friend bool operator==(const RunStats&, const RunStats&) = default;
};

} // namespace adjmat
