#include "mcdakit/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "mcdakit/util.hpp"

namespace mcdakit {

const char* to_string(Direction d) {
    return d == Direction::Maximize ? "max" : "min";
}

const char* to_string(Method m) {
    switch (m) {
        case Method::SAW: return "saw";
        case Method::TOPSIS: return "topsis";
        case Method::VIKOR: return "vikor";
    }
    return "?";
}

std::optional<Method> method_from_string(const std::string& s) {
    if (s == "saw") return Method::SAW;
    if (s == "topsis") return Method::TOPSIS;
    if (s == "vikor") return Method::VIKOR;
    return std::nullopt;
}

std::optional<Direction> direction_from_string(const std::string& s) {
    if (s == "max") return Direction::Maximize;
    if (s == "min") return Direction::Minimize;
    return std::nullopt;
}

CriteriaSet CriteriaSet::equal_weights(std::vector<std::string> names,
                                       std::vector<Direction> directions) {
    if (names.size() != directions.size())
        throw std::invalid_argument("equal_weights: names/directions size mismatch");
    CriteriaSet set;
    set.criteria.reserve(names.size());
    const double w = names.empty() ? 1.0 : 1.0 / static_cast<double>(names.size());
    for (std::size_t j = 0; j < names.size(); ++j)
        set.criteria.push_back({std::move(names[j]), directions[j], w});
    return set;
}

std::vector<Violation> validate_matrix(std::span<const double> values,
                                       std::size_t n_options,
                                       const CriteriaSet& criteria,
                                       std::span<const std::string> option_ids) {
    std::vector<Violation> report;
    const std::size_t n = criteria.size();

    if (n == 0)
        report.push_back({ViolationKind::EmptyCriteria, Violation::npos, Violation::npos,
                          "criteria set is empty"});
    if (n_options == 0)
        report.push_back({ViolationKind::EmptyMatrix, Violation::npos, Violation::npos,
                          "matrix has no options"});

    std::unordered_set<std::string_view> seen;
    for (std::size_t j = 0; j < n; ++j) {
        const auto& c = criteria[j];
        if (c.name.empty())
            report.push_back({ViolationKind::EmptyCriterionName, Violation::npos, j,
                              "criterion " + std::to_string(j) + " has an empty name"});
        else if (!seen.insert(c.name).second)
            report.push_back({ViolationKind::DuplicateCriterionName, Violation::npos, j,
                              "duplicate criterion name '" + c.name + "' at column " +
                                  std::to_string(j)});
        if (!(c.weight >= 0.0))
            report.push_back({ViolationKind::NegativeWeight, Violation::npos, j,
                              "criterion '" + c.name + "' has weight " +
                                  format_double(c.weight) + " < 0"});
    }

    if (values.size() != n_options * n) {
        report.push_back({ViolationKind::DimensionMismatch, Violation::npos, Violation::npos,
                          "value count " + std::to_string(values.size()) + " != options " +
                              std::to_string(n_options) + " x criteria " + std::to_string(n)});
    } else {
        for (std::size_t i = 0; i < n_options; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!std::isfinite(values[i * n + j]))
                    report.push_back({ViolationKind::NonFiniteCell, i, j,
                                      "non-finite cell at (" + std::to_string(i) + "," +
                                          std::to_string(j) + ")"});
    }

    if (option_ids.size() != n_options)
        report.push_back({ViolationKind::DimensionMismatch, Violation::npos, Violation::npos,
                          "option id count " + std::to_string(option_ids.size()) +
                              " != option count " + std::to_string(n_options)});

    return report;
}

std::vector<Violation> validate_matrix(const DecisionMatrix& matrix) {
    return validate_matrix(matrix.values(), matrix.option_count(), matrix.criteria(),
                           matrix.option_ids());
}

DecisionMatrix::DecisionMatrix(std::vector<double> values, std::size_t n_options,
                               CriteriaSet criteria, std::vector<std::string> option_ids) {
    auto report = mcdakit::validate_matrix(values, n_options, criteria, option_ids);
    if (!report.empty()) {
        std::string what = "invalid decision matrix:";
        for (const auto& v : report) what += "\n  " + v.message;
        throw std::invalid_argument(what);
    }
    values_ = std::move(values);
    n_options_ = n_options;
    criteria_ = std::move(criteria);
    option_ids_ = std::move(option_ids);
}

DecisionMatrix DecisionMatrix::unchecked(std::vector<double> values, std::size_t n_options,
                                         CriteriaSet criteria,
                                         std::vector<std::string> option_ids) {
    DecisionMatrix m;
    m.values_ = std::move(values);
    m.n_options_ = n_options;
    m.criteria_ = std::move(criteria);
    m.option_ids_ = std::move(option_ids);
    return m;
}

DecisionMatrix DecisionMatrix::with_weights(const std::vector<double>& weights) const {
    if (weights.size() != criteria_.size())
        throw std::invalid_argument("with_weights: expected " +
                                    std::to_string(criteria_.size()) + " weights, got " +
                                    std::to_string(weights.size()));
    CriteriaSet updated = criteria_;
    for (std::size_t j = 0; j < weights.size(); ++j) updated.criteria[j].weight = weights[j];
    return DecisionMatrix(values_, n_options_, std::move(updated), option_ids_);
}

Selection top_k(const Ranking& ranking, std::size_t k) {
    if (k == 0) throw std::invalid_argument("top_k: k must be at least 1");
    const std::size_t take = std::min(k, ranking.order.size());
    Selection sel;
    sel.k = k;
    sel.indices.assign(ranking.order.begin(), ranking.order.begin() + take);
    return sel;
}

} // namespace mcdakit
