#include "mcdakit/mcda.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mcdakit {

namespace {

std::vector<std::size_t> ranked_order(const std::vector<double>& scores, bool descending) {
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    // stable sort keeps ascending original index among equal scores
    if (descending) {
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
    } else {
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
    }
    return order;
}

struct ColumnExtrema {
    std::vector<double> best;   // under the criterion's direction
    std::vector<double> worst;
};

ColumnExtrema column_extrema(const DecisionMatrix& m) {
    const std::size_t rows = m.option_count();
    const std::size_t cols = m.criterion_count();
    ColumnExtrema ext{std::vector<double>(cols), std::vector<double>(cols)};
    for (std::size_t j = 0; j < cols; ++j) {
        double lo = m.at(0, j);
        double hi = lo;
        for (std::size_t i = 1; i < rows; ++i) {
            const double v = m.at(i, j);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        const bool maximize = m.criteria()[j].direction == Direction::Maximize;
        ext.best[j] = maximize ? hi : lo;
        ext.worst[j] = maximize ? lo : hi;
    }
    return ext;
}

} // namespace

std::vector<double> saw_normalize(const DecisionMatrix& matrix) {
    const std::size_t rows = matrix.option_count();
    const std::size_t cols = matrix.criterion_count();

    std::vector<double> lo(cols), hi(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        lo[j] = hi[j] = matrix.at(0, j);
        for (std::size_t i = 1; i < rows; ++i) {
            const double v = matrix.at(i, j);
            lo[j] = std::min(lo[j], v);
            hi[j] = std::max(hi[j], v);
        }
    }

    std::vector<double> normalized(rows * cols);
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const double span = hi[j] - lo[j];
            double value = 0.0;  // degenerate column: every row maps to 0
            if (span > 0.0) {
                const double v = matrix.at(i, j);
                value = matrix.criteria()[j].direction == Direction::Maximize
                            ? (v - lo[j]) / span
                            : (hi[j] - v) / span;
            }
            normalized[i * cols + j] = value;
        }
    }
    return normalized;
}

Ranking saw_rank(const DecisionMatrix& matrix) {
    const std::size_t rows = matrix.option_count();
    const std::size_t cols = matrix.criterion_count();

    std::vector<double> normalized = saw_normalize(matrix);
    std::vector<double> scores(rows);
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < rows; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < cols; ++j)
            sum += matrix.criteria()[j].weight * normalized[i * cols + j];
        scores[i] = sum;
    }

    Ranking ranking;
    ranking.method = Method::SAW;
    ranking.order = ranked_order(scores, /*descending=*/true);
    ranking.scores = std::move(scores);
    ranking.trace.normalized = std::move(normalized);
    return ranking;
}

Ranking topsis_rank(const DecisionMatrix& matrix) {
    const std::size_t rows = matrix.option_count();
    const std::size_t cols = matrix.criterion_count();

    std::vector<double> norm(cols, 0.0);
    for (std::size_t j = 0; j < cols; ++j) {
        double sumsq = 0.0;
        for (std::size_t i = 0; i < rows; ++i) {
            const double v = matrix.at(i, j);
            sumsq += v * v;
        }
        norm[j] = std::sqrt(sumsq);
    }

    std::vector<double> normalized(rows * cols);
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            normalized[i * cols + j] = norm[j] > 0.0 ? matrix.at(i, j) / norm[j] : 0.0;

    // ideal points live in the normalized (unweighted) space
    std::vector<double> ideal_pos(cols), ideal_neg(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        double lo = normalized[j];
        double hi = lo;
        for (std::size_t i = 1; i < rows; ++i) {
            const double v = normalized[i * cols + j];
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        const bool maximize = matrix.criteria()[j].direction == Direction::Maximize;
        ideal_pos[j] = maximize ? hi : lo;
        ideal_neg[j] = maximize ? lo : hi;
    }

    std::vector<double> dist_pos(rows), dist_neg(rows), scores(rows);
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < rows; ++i) {
        double dp = 0.0;
        double dn = 0.0;
        for (std::size_t j = 0; j < cols; ++j) {
            const double w = matrix.criteria()[j].weight;
            const double v = w * normalized[i * cols + j];
            const double tp = v - w * ideal_pos[j];
            const double tn = v - w * ideal_neg[j];
            dp += tp * tp;
            dn += tn * tn;
        }
        dist_pos[i] = std::sqrt(dp);
        dist_neg[i] = std::sqrt(dn);
        const double total = dist_pos[i] + dist_neg[i];
        scores[i] = total > 0.0 ? dist_neg[i] / total : 0.5;
    }

    Ranking ranking;
    ranking.method = Method::TOPSIS;
    ranking.order = ranked_order(scores, /*descending=*/true);
    ranking.scores = std::move(scores);
    ranking.trace.normalized = std::move(normalized);
    ranking.trace.ideal_positive = std::move(ideal_pos);
    ranking.trace.ideal_negative = std::move(ideal_neg);
    ranking.trace.dist_positive = std::move(dist_pos);
    ranking.trace.dist_negative = std::move(dist_neg);
    return ranking;
}

Ranking vikor_rank(const DecisionMatrix& matrix, VikorParams params) {
    if (!(params.v >= 0.0 && params.v <= 1.0))
        throw std::invalid_argument("vikor_rank: v must lie in [0, 1]");

    const std::size_t rows = matrix.option_count();
    const std::size_t cols = matrix.criterion_count();
    const ColumnExtrema ext = column_extrema(matrix);

    std::vector<double> utility(rows), regret(rows);
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < rows; ++i) {
        double s = 0.0;
        double r = 0.0;
        for (std::size_t j = 0; j < cols; ++j) {
            const double denom = std::abs(ext.best[j] - ext.worst[j]);
            if (denom == 0.0) continue;  // constant column cannot discriminate
            const double term =
                matrix.criteria()[j].weight * std::abs(ext.best[j] - matrix.at(i, j)) / denom;
            s += term;
            r = std::max(r, term);
        }
        utility[i] = s;
        regret[i] = r;
    }

    const auto [s_best_it, s_worst_it] = std::minmax_element(utility.begin(), utility.end());
    const auto [r_best_it, r_worst_it] = std::minmax_element(regret.begin(), regret.end());
    const double s_best = *s_best_it, s_worst = *s_worst_it;
    const double r_best = *r_best_it, r_worst = *r_worst_it;
    const double s_span = s_worst - s_best;
    const double r_span = r_worst - r_best;

    std::vector<double> scores(rows);
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < rows; ++i) {
        // Ratio before weight: keeps each term <= its weight and Q <= 1 in
        // floating point (the ratio rounds to at most 1, the product to at most v).
        const double s_term = s_span > 0.0 ? params.v * ((utility[i] - s_best) / s_span) : 0.0;
        const double r_term =
            r_span > 0.0 ? (1.0 - params.v) * ((regret[i] - r_best) / r_span) : 0.0;
        scores[i] = s_term + r_term;
    }

    Ranking ranking;
    ranking.method = Method::VIKOR;
    ranking.order = ranked_order(scores, /*descending=*/false);  // smallest Q is best
    ranking.scores = scores;
    ranking.trace.ideal_positive = ext.best;
    ranking.trace.ideal_negative = ext.worst;
    ranking.trace.utility = std::move(utility);
    ranking.trace.regret = std::move(regret);
    ranking.trace.group_utility = std::move(scores);
    return ranking;
}

Ranking rank_matrix(const DecisionMatrix& matrix, Method method, VikorParams vikor) {
    switch (method) {
        case Method::SAW: return saw_rank(matrix);
        case Method::TOPSIS: return topsis_rank(matrix);
        case Method::VIKOR: return vikor_rank(matrix, vikor);
    }
    throw std::invalid_argument("rank_matrix: unknown method");
}

CompromiseSet vikor_compromise(const Ranking& ranking) {
    if (ranking.method != Method::VIKOR)
        throw std::invalid_argument("vikor_compromise: ranking was not produced by vikor_rank");
    if (!ranking.trace.utility || !ranking.trace.regret || !ranking.trace.group_utility)
        throw std::invalid_argument("vikor_compromise: ranking trace is not populated");

    const auto& q = *ranking.trace.group_utility;
    const auto& s = *ranking.trace.utility;
    const auto& r = *ranking.trace.regret;
    const std::size_t m = ranking.order.size();

    CompromiseSet result;
    if (m == 1) {
        result.members = {ranking.order[0]};
        result.condition_c1_satisfied = true;
        result.condition_c2_satisfied = true;
        return result;
    }

    const std::size_t best = ranking.order[0];
    const std::size_t second = ranking.order[1];
    const double dq = 1.0 / static_cast<double>(m - 1);

    result.condition_c1_satisfied = q[second] - q[best] >= dq;
    // ties count: the best-by-Q option is first by S (or R) iff it attains the minimum
    const double s_min = *std::min_element(s.begin(), s.end());
    const double r_min = *std::min_element(r.begin(), r.end());
    result.condition_c2_satisfied = s[best] == s_min || r[best] == r_min;

    if (result.condition_c1_satisfied && result.condition_c2_satisfied) {
        result.members = {best};
    } else if (result.condition_c1_satisfied) {
        result.members = {best, second};
    } else {
        for (std::size_t rank = 0; rank < m; ++rank) {
            const std::size_t option = ranking.order[rank];
            if (q[option] - q[best] < dq) result.members.push_back(option);
        }
    }
    return result;
}

} // namespace mcdakit
