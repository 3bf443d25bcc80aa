#ifndef MCDAKIT_PARETO_HPP
#define MCDAKIT_PARETO_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "mcdakit/model.hpp"

namespace mcdakit {

/// Assignment of every option to a Pareto front. Front indices are 1-based;
/// front 1 is the non-dominated set. `fronts` lists option indices per front
/// in ascending order; the fronts partition {0..M-1}.
struct ParetoPartition {
    std::vector<std::size_t> front_of;               // per option, 1-based
    std::vector<std::vector<std::size_t>> fronts;    // per front, ascending
    std::vector<std::size_t> front_sizes;

    std::size_t front_count() const { return fronts.size(); }
};

/// True iff x is at least as good as y on every criterion under its
/// direction and strictly better on at least one. Weights play no role.
/// Throws std::invalid_argument on a row/criteria length mismatch.
bool dominates(std::span<const double> x, std::span<const double> y,
               const CriteriaSet& criteria);

/// Reference front sort by repeated peeling: front 1 collects everything not
/// dominated by any remaining option, gets removed, repeat. O(M^2 N) per
/// peel and strictly sequential; used as the verification oracle and for
/// small runs.
ParetoPartition naive_front_sort(const DecisionMatrix& matrix);

/// Front sort via domination-count bookkeeping: one pass computes how many
/// options dominate each option (count 0 = front 1), then peeling a front
/// subtracts its members' dominations from the remaining counts, and the
/// counts that reach zero form the next front. The counting passes run in
/// parallel when OpenMP is enabled; dominance is exact comparison logic, so
/// the partition is identical to naive_front_sort regardless of schedule.
/// Memory stays O(M) (no per-option dominated lists), which is what lets the
/// 100k-option runs fit.
ParetoPartition fast_non_dominated_sort(const DecisionMatrix& matrix);

} // namespace mcdakit

#endif
