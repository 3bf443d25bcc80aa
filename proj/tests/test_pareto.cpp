#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <vector>

#include "mcdakit/pareto.hpp"
#include "helpers.hpp"

using namespace mcdakit;
using testutil::make_matrix;

namespace {

void check_partition_invariants(const ParetoPartition& p, std::size_t options) {
    REQUIRE(p.front_of.size() == options);
    REQUIRE(p.fronts.size() == p.front_sizes.size());

    std::size_t total = 0;
    for (std::size_t f = 0; f < p.fronts.size(); ++f) {
        CHECK(p.fronts[f].size() == p.front_sizes[f]);
        CHECK_FALSE(p.fronts[f].empty());
        CHECK(std::is_sorted(p.fronts[f].begin(), p.fronts[f].end()));
        for (std::size_t i : p.fronts[f]) CHECK(p.front_of[i] == f + 1);
        total += p.fronts[f].size();
    }
    CHECK(total == options);
}

} // namespace

TEST_CASE("dominates respects directions, strictness, and equality") {
    const CriteriaSet cs =
        CriteriaSet::equal_weights({"a", "b"}, {Direction::Maximize, Direction::Minimize});

    const std::vector<double> x = {5.0, 2.0};
    const std::vector<double> y = {4.0, 3.0};
    const std::vector<double> same = {5.0, 2.0};
    const std::vector<double> trade = {6.0, 4.0};

    CHECK(dominates(x, y, cs));
    CHECK_FALSE(dominates(y, x, cs));
    CHECK_FALSE(dominates(x, same, cs));       // equal rows never dominate
    CHECK_FALSE(dominates(trade, x, cs));      // better a, worse b
    CHECK_FALSE(dominates(x, trade, cs));

    // at least as good everywhere, strictly better on one
    const std::vector<double> partial = {5.0, 3.0};
    CHECK(dominates(x, partial, cs));

    const std::vector<double> short_row = {1.0};
    CHECK_THROWS_AS(dominates(short_row, y, cs), std::invalid_argument);
    CHECK_THROWS_AS(dominates(x, short_row, cs), std::invalid_argument);
}

TEST_CASE("dominance ignores weights") {
    CriteriaSet cs =
        CriteriaSet::equal_weights({"a", "b"}, {Direction::Maximize, Direction::Maximize});
    cs.criteria[0].weight = 0.0;
    const std::vector<double> x = {9.0, 1.0};
    const std::vector<double> y = {1.0, 1.0};
    CHECK(dominates(x, y, cs));
}

TEST_CASE("naive sort on a hand-checked matrix") {
    // (max, min): 0 and 3 are non-dominated; peeling them leaves 1 on top of
    // 2 on top of 4.
    const DecisionMatrix m = make_matrix(
        {{9.0, 2.0}, {7.0, 3.0}, {6.0, 4.0}, {10.0, 8.0}, {5.0, 9.0}},
        {Direction::Maximize, Direction::Minimize});

    const ParetoPartition p = naive_front_sort(m);
    check_partition_invariants(p, 5);
    CHECK(p.fronts == std::vector<std::vector<std::size_t>>{{0, 3}, {1}, {2}, {4}});
    CHECK(p.front_of == std::vector<std::size_t>{1, 2, 3, 1, 4});
    CHECK(p.front_sizes == std::vector<std::size_t>{2, 1, 1, 1});
}

TEST_CASE("degenerate shapes") {
    SUBCASE("single option is front 1") {
        const DecisionMatrix m = make_matrix({{1.0, 2.0}},
                                             {Direction::Maximize, Direction::Maximize});
        const ParetoPartition p = fast_non_dominated_sort(m);
        CHECK(p.front_count() == 1);
        CHECK(p.front_of == std::vector<std::size_t>{1});
    }
    SUBCASE("identical rows share front 1") {
        const DecisionMatrix m = make_matrix({{3.0, 4.0}, {3.0, 4.0}, {3.0, 4.0}},
                                             {Direction::Maximize, Direction::Minimize});
        for (const ParetoPartition& p : {naive_front_sort(m), fast_non_dominated_sort(m)}) {
            CHECK(p.front_count() == 1);
            CHECK(p.front_sizes == std::vector<std::size_t>{3});
        }
    }
    SUBCASE("an antichain is one front") {
        // x + y constant: no pair dominates
        const DecisionMatrix m = make_matrix(
            {{1.0, 9.0}, {2.0, 8.0}, {3.0, 7.0}, {4.0, 6.0}, {5.0, 5.0}},
            {Direction::Maximize, Direction::Maximize});
        const ParetoPartition p = fast_non_dominated_sort(m);
        CHECK(p.front_count() == 1);
        CHECK(p.front_sizes == std::vector<std::size_t>{5});
    }
    SUBCASE("a chain gives one singleton front per option") {
        const DecisionMatrix m = make_matrix(
            {{1.0, 1.0}, {2.0, 2.0}, {3.0, 3.0}, {4.0, 4.0}},
            {Direction::Maximize, Direction::Maximize});
        const ParetoPartition p = fast_non_dominated_sort(m);
        REQUIRE(p.front_count() == 4);
        CHECK(p.front_of == std::vector<std::size_t>{4, 3, 2, 1});
        for (std::size_t size : p.front_sizes) CHECK(size == 1);
    }
}

TEST_CASE("minimize columns behave as negated maximize columns") {
    const DecisionMatrix m = testutil::random_matrix(99, 40, 3);

    std::vector<double> negated(m.values().begin(), m.values().end());
    for (double& v : negated) v = -v;
    CriteriaSet criteria = m.criteria();
    for (CriterionSpec& c : criteria.criteria)
        c.direction = c.direction == Direction::Maximize ? Direction::Minimize
                                                         : Direction::Maximize;
    const DecisionMatrix mf =
        DecisionMatrix(std::move(negated), m.option_count(), criteria, m.option_ids());

    const ParetoPartition a = fast_non_dominated_sort(m);
    const ParetoPartition b = fast_non_dominated_sort(mf);
    CHECK(a.front_of == b.front_of);
    CHECK(a.fronts == b.fronts);
}

TEST_CASE("fast sort equals the naive oracle on random matrices") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const std::size_t rows = 10 + (seed * 13) % 110;
        const std::size_t cols = 2 + seed % 5;
        const DecisionMatrix m = testutil::random_matrix(seed * 101, rows, cols);

        const ParetoPartition naive = naive_front_sort(m);
        const ParetoPartition fast = fast_non_dominated_sort(m);
        check_partition_invariants(naive, rows);
        check_partition_invariants(fast, rows);

        REQUIRE(naive.front_of == fast.front_of);
        REQUIRE(naive.fronts == fast.fronts);
        REQUIRE(naive.front_sizes == fast.front_sizes);
    }
}

TEST_CASE("duplicated rows land on the same front") {
    // duplicates cannot dominate each other, so they always share a front
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const DecisionMatrix base = testutil::random_matrix(seed * 7, 20, 3);
        std::vector<double> values(base.values().begin(), base.values().end());
        values.insert(values.end(), base.values().begin(), base.values().begin() + 3);
        std::vector<std::string> ids = base.option_ids();
        ids.push_back("dup");
        const DecisionMatrix m =
            DecisionMatrix(std::move(values), 21, base.criteria(), std::move(ids));

        const ParetoPartition p = fast_non_dominated_sort(m);
        CHECK(p.front_of[0] == p.front_of[20]);
    }
}
