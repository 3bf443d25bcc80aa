#include "mcdakit/pareto.hpp"

#include <stdexcept>

namespace mcdakit {

namespace {

// Dominance after orienting every column as maximize.
bool dominates_oriented(const double* x, const double* y, std::size_t n) {
    bool strict = false;
    for (std::size_t j = 0; j < n; ++j) {
        if (x[j] < y[j]) return false;
        if (x[j] > y[j]) strict = true;
    }
    return strict;
}

// Copy of the matrix values with Minimize columns negated, so that a single
// all-maximize comparison decides dominance. Negation is an exact sign flip,
// so no ordering information is lost.
std::vector<double> oriented_values(const DecisionMatrix& m) {
    const std::size_t rows = m.option_count();
    const std::size_t cols = m.criterion_count();
    std::vector<double> oriented(m.values().begin(), m.values().end());
    for (std::size_t j = 0; j < cols; ++j) {
        if (m.criteria()[j].direction == Direction::Maximize) continue;
        for (std::size_t i = 0; i < rows; ++i) oriented[i * cols + j] = -oriented[i * cols + j];
    }
    return oriented;
}

} // namespace

bool dominates(std::span<const double> x, std::span<const double> y,
               const CriteriaSet& criteria) {
    if (x.size() != criteria.size() || y.size() != criteria.size())
        throw std::invalid_argument("dominates: row length does not match criteria count");

    bool strict = false;
    for (std::size_t j = 0; j < criteria.size(); ++j) {
        const bool maximize = criteria[j].direction == Direction::Maximize;
        const double a = maximize ? x[j] : -x[j];
        const double b = maximize ? y[j] : -y[j];
        if (a < b) return false;
        if (a > b) strict = true;
    }
    return strict;
}

ParetoPartition naive_front_sort(const DecisionMatrix& matrix) {
    const std::size_t rows = matrix.option_count();
    const std::size_t cols = matrix.criterion_count();
    const std::vector<double> oriented = oriented_values(matrix);

    ParetoPartition partition;
    partition.front_of.assign(rows, 0);

    std::vector<std::size_t> remaining(rows);
    for (std::size_t i = 0; i < rows; ++i) remaining[i] = i;

    while (!remaining.empty()) {
        std::vector<std::size_t> front;
        for (std::size_t i : remaining) {
            bool dominated = false;
            for (std::size_t j : remaining) {
                if (j == i) continue;
                if (dominates_oriented(&oriented[j * cols], &oriented[i * cols], cols)) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) front.push_back(i);
        }

        const std::size_t index = partition.fronts.size() + 1;
        for (std::size_t i : front) partition.front_of[i] = index;

        std::vector<std::size_t> next;
        next.reserve(remaining.size() - front.size());
        for (std::size_t i : remaining)
            if (partition.front_of[i] == 0) next.push_back(i);
        remaining = std::move(next);

        partition.front_sizes.push_back(front.size());
        partition.fronts.push_back(std::move(front));
    }
    return partition;
}

ParetoPartition fast_non_dominated_sort(const DecisionMatrix& matrix) {
    const std::size_t rows = matrix.option_count();
    const std::size_t cols = matrix.criterion_count();
    const std::vector<double> oriented = oriented_values(matrix);

    // Phase 1: dominator counts. Each iteration writes only counts[i].
    std::vector<std::size_t> counts(rows, 0);
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < rows; ++i) {
        const double* mine = &oriented[i * cols];
        std::size_t count = 0;
        for (std::size_t j = 0; j < rows; ++j) {
            if (j == i) continue;
            if (dominates_oriented(&oriented[j * cols], mine, cols)) ++count;
        }
        counts[i] = count;
    }

    ParetoPartition partition;
    partition.front_of.assign(rows, 0);

    std::vector<std::size_t> current;
    std::vector<std::size_t> remaining;
    remaining.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        if (counts[i] == 0) {
            current.push_back(i);
        } else {
            remaining.push_back(i);
        }
    }

    while (!current.empty()) {
        const std::size_t index = partition.fronts.size() + 1;
        for (std::size_t i : current) partition.front_of[i] = index;
        partition.front_sizes.push_back(current.size());
        partition.fronts.push_back(current);

        // Subtract the peeled front's dominations by recounting against just
        // that front. Counts hitting zero form the next front; `remaining`
        // and `current` stay in ascending index order throughout.
        const std::vector<std::size_t>& peeled = partition.fronts.back();
#pragma omp parallel for schedule(static)
        for (std::size_t r = 0; r < remaining.size(); ++r) {
            const std::size_t i = remaining[r];
            const double* mine = &oriented[i * cols];
            std::size_t removed = 0;
            for (std::size_t j : peeled)
                if (dominates_oriented(&oriented[j * cols], mine, cols)) ++removed;
            counts[i] -= removed;
        }

        current.clear();
        std::vector<std::size_t> next;
        next.reserve(remaining.size());
        for (std::size_t i : remaining) {
            if (counts[i] == 0) {
                current.push_back(i);
            } else {
                next.push_back(i);
            }
        }
        remaining = std::move(next);
    }
    return partition;
}

} // namespace mcdakit
