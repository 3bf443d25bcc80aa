#ifndef MCDAKIT_MODEL_HPP
#define MCDAKIT_MODEL_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mcdakit {

/// Whether larger or smaller raw values are better for a criterion.
enum class Direction { Maximize, Minimize };

enum class Method { SAW, TOPSIS, VIKOR };

const char* to_string(Direction d);
const char* to_string(Method m);
std::optional<Method> method_from_string(const std::string& s);
std::optional<Direction> direction_from_string(const std::string& s);

/// One decision criterion: a named column with an optimization direction and
/// a non-negative weight. Weights need not sum to one; every ranking method
/// here is invariant under positive rescaling of the whole weight vector.
struct CriterionSpec {
    std::string name;
    Direction direction = Direction::Maximize;
    double weight = 1.0;
};

/// Ordered list of criteria, one per matrix column.
struct CriteriaSet {
    std::vector<CriterionSpec> criteria;

    std::size_t size() const { return criteria.size(); }
    const CriterionSpec& operator[](std::size_t j) const { return criteria[j]; }

    /// Equal weights 1/N over the given names and directions.
    static CriteriaSet equal_weights(std::vector<std::string> names,
                                     std::vector<Direction> directions);
};

enum class ViolationKind {
    NonFiniteCell,
    DimensionMismatch,
    EmptyMatrix,
    EmptyCriteria,
    EmptyCriterionName,
    DuplicateCriterionName,
    NegativeWeight,
};

/// One invariant violation found by validate_matrix. Row/col are set for
/// cell-level findings and left at npos otherwise.
struct Violation {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    ViolationKind kind;
    std::size_t row = npos;
    std::size_t col = npos;
    std::string message;
};

/// Checks decision-matrix ingredients against every model invariant:
/// finite cells, consistent dimensions, non-empty unique criterion names,
/// non-negative weights. Violations are data, not faults: the report is
/// empty exactly when the ingredients form a valid matrix.
std::vector<Violation> validate_matrix(std::span<const double> values,
                                       std::size_t n_options,
                                       const CriteriaSet& criteria,
                                       std::span<const std::string> option_ids);

/// M options x N criteria of raw attribute values, row-major. Immutable
/// after construction; the validating constructor throws on any invariant
/// violation, so a constructed matrix always validates clean.
class DecisionMatrix {
public:
    /// Throws std::invalid_argument listing the violations, if any.
    DecisionMatrix(std::vector<double> values, std::size_t n_options,
                   CriteriaSet criteria, std::vector<std::string> option_ids);

    /// Builds without validation. For callers that assemble parts that may
    /// be invalid on purpose (tests, validators); everything else should use
    /// the validating constructor.
    static DecisionMatrix unchecked(std::vector<double> values, std::size_t n_options,
                                    CriteriaSet criteria, std::vector<std::string> option_ids);

    std::size_t option_count() const { return n_options_; }
    std::size_t criterion_count() const { return criteria_.size(); }

    double at(std::size_t i, std::size_t j) const { return values_[i * criteria_.size() + j]; }
    std::span<const double> row(std::size_t i) const {
        return {values_.data() + i * criteria_.size(), criteria_.size()};
    }
    std::span<const double> values() const { return values_; }

    const CriteriaSet& criteria() const { return criteria_; }
    const std::vector<std::string>& option_ids() const { return option_ids_; }

    /// Same matrix with every criterion weight replaced.
    DecisionMatrix with_weights(const std::vector<double>& weights) const;

private:
    DecisionMatrix() = default;

    std::vector<double> values_;
    std::size_t n_options_ = 0;
    CriteriaSet criteria_;
    std::vector<std::string> option_ids_;
};

std::vector<Violation> validate_matrix(const DecisionMatrix& matrix);

/// Intermediate quantities of a ranking method, for auditing without
/// recomputation. Which fields are populated depends on the method.
struct MethodTrace {
    std::optional<std::vector<double>> normalized;      // M x N, row-major
    std::optional<std::vector<double>> ideal_positive;  // N
    std::optional<std::vector<double>> ideal_negative;  // N
    std::optional<std::vector<double>> dist_positive;   // M
    std::optional<std::vector<double>> dist_negative;   // M
    std::optional<std::vector<double>> utility;         // M
    std::optional<std::vector<double>> regret;          // M
    std::optional<std::vector<double>> group_utility;   // M
};

/// Result of one ranking method over a matrix. `order` is a permutation of
/// option indices, best first; `scores[i]` is the method's final score for
/// option i under its original index. Ties are broken by ascending index.
struct Ranking {
    Method method = Method::SAW;
    std::vector<std::size_t> order;
    std::vector<double> scores;
    MethodTrace trace;
};

/// Top-k cut of a ranking. `indices` keeps rank order; treated as a set by
/// the evaluation layer.
struct Selection {
    std::vector<std::size_t> indices;
    std::size_t k = 0;
};

/// First min(k, M) options of the ranking. Throws std::invalid_argument for
/// k == 0; the selection workflow requires at least one option.
Selection top_k(const Ranking& ranking, std::size_t k);

} // namespace mcdakit

#endif
