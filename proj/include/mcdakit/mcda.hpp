#ifndef MCDAKIT_MCDA_HPP
#define MCDAKIT_MCDA_HPP

#include <cstddef>
#include <vector>

#include "mcdakit/model.hpp"

namespace mcdakit {

/// Weight of the majority strategy in the VIKOR index, in [0, 1].
struct VikorParams {
    double v = 0.5;
};

/// VIKOR step-5 recommendation: the options that qualify as the compromise
/// solution, best-Q first, with the outcome of the two acceptance tests.
struct CompromiseSet {
    std::vector<std::size_t> members;
    bool condition_c1_satisfied = false;  // acceptable advantage
    bool condition_c2_satisfied = false;  // acceptable stability
};

/// Min-max normalization per column under its direction. Maximize columns
/// map [min, max] -> [0, 1] increasing, Minimize columns decreasing.
/// Degenerate columns (max == min) map to 0 for every row.
std::vector<double> saw_normalize(const DecisionMatrix& matrix);

/// Simple additive weighting: weighted sum of the min-max normalized rows,
/// ranked descending by score.
Ranking saw_rank(const DecisionMatrix& matrix);

/// Distance-to-ideal ranking: vector-normalize each column, locate the
/// positive/negative ideal per column under its direction, then rank
/// descending by relative closeness c = s- / (s+ + s-), where s+/s- are the
/// weighted Euclidean distances to the two ideals. An option equidistant at
/// zero from both ideals (all columns degenerate) gets c = 0.5.
Ranking topsis_rank(const DecisionMatrix& matrix);

/// Compromise ranking: per-column best/worst values give the weighted gap
/// terms, summed into utility S and maxed into regret R, combined into
/// Q = v * (S - S*) / (S- - S*) + (1 - v) * (R - R*) / (R- - R*), ranked
/// ascending by Q. Degenerate columns contribute 0 to S and R; either Q term
/// is 0 when its denominator vanishes.
Ranking vikor_rank(const DecisionMatrix& matrix, VikorParams params = {});

/// VIKOR step 5 on a ranking produced by vikor_rank. With DQ = 1/(M-1):
/// C1 holds iff the runner-up's Q trails the best by at least DQ; C2 holds
/// iff the best-Q option also attains the minimum S or the minimum R. Both
/// hold -> single member; only C2 fails -> best two; C1 fails -> every
/// option within DQ of the best Q. A single-option ranking yields a
/// single-member set with both conditions vacuously true.
CompromiseSet vikor_compromise(const Ranking& ranking);

/// Dispatch to the ranking routine named by `method`. `vikor` is consulted
/// only when method == Method::VIKOR.
Ranking rank_matrix(const DecisionMatrix& matrix, Method method, VikorParams vikor = {});

} // namespace mcdakit

#endif
