// Shared builders for test matrices.
#ifndef TESTS_HELPERS_HPP
#define TESTS_HELPERS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mcdakit/model.hpp"

namespace testutil {

inline mcdakit::DecisionMatrix make_matrix(const std::vector<std::vector<double>>& rows,
                                           const std::vector<mcdakit::Direction>& directions,
                                           std::vector<double> weights = {}) {
    const std::size_t n = directions.size();
    if (weights.empty()) weights.assign(n, 1.0 / static_cast<double>(n));

    mcdakit::CriteriaSet criteria;
    for (std::size_t j = 0; j < n; ++j)
        criteria.criteria.push_back({"c" + std::to_string(j), directions[j], weights[j]});

    std::vector<double> values;
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        values.insert(values.end(), rows[i].begin(), rows[i].end());
        ids.push_back("o" + std::to_string(i));
    }
    return mcdakit::DecisionMatrix(std::move(values), rows.size(), std::move(criteria),
                                   std::move(ids));
}

// Random matrix with mixed directions and weights, deterministic per seed.
inline mcdakit::DecisionMatrix random_matrix(std::uint64_t seed, std::size_t rows,
                                             std::size_t cols) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> value(-50.0, 50.0);
    std::uniform_real_distribution<double> weight(0.1, 2.0);

    std::vector<std::vector<double>> data(rows, std::vector<double>(cols));
    for (auto& row : data)
        for (double& cell : row) cell = value(rng);

    std::vector<mcdakit::Direction> directions;
    std::vector<double> weights;
    for (std::size_t j = 0; j < cols; ++j) {
        directions.push_back(rng() % 2 == 0 ? mcdakit::Direction::Maximize
                                            : mcdakit::Direction::Minimize);
        weights.push_back(weight(rng));
    }
    return make_matrix(data, directions, weights);
}

} // namespace testutil

#endif
