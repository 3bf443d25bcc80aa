#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <unistd.h>
#include <vector>

#include "mcdakit/errors.hpp"
#include "mcdakit/harness.hpp"

using namespace mcdakit;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("mcdakit_harness_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int& counter() {
        static int n = 0;
        return n;
    }
};

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream out;
    out << f.rdbuf();
    return out.str();
}

DecisionMatrix small_dataset(std::uint64_t seed, std::size_t n = 80) {
    GeneratorConfig config;
    config.n_sensors = n;
    config.seed = seed;
    return generate(config);
}

GridSpec tiny_spec() {
    GridSpec spec;
    spec.n_sensors = 60;
    spec.methods = {Method::SAW, Method::TOPSIS, Method::VIKOR};
    spec.ks = {5, 10};
    spec.property_counts = {2, 3};
    spec.seeds = {1, 2};
    return spec;
}

} // namespace

TEST_CASE("run_cell equals the hand-composed pipeline") {
    const DecisionMatrix dataset = small_dataset(17);
    const ExperimentResult cell = run_cell(dataset, Method::TOPSIS, 12, 3, 0.5);

    const DecisionMatrix projected = project_properties(dataset, 3);
    const Selection selection = top_k(topsis_rank(projected), 12);
    const SelectionQuality expected =
        evaluate_selection(selection, fast_non_dominated_sort(projected));

    CHECK(cell.method == Method::TOPSIS);
    CHECK(cell.n_sensors == 80);
    CHECK(cell.k == 12);
    CHECK(cell.n_properties == 3);
    CHECK(cell.quality.fronts_spanned == expected.fronts_spanned);
    REQUIRE(cell.quality.coverages.size() == expected.coverages.size());
    for (std::size_t f = 0; f < expected.coverages.size(); ++f) {
        CHECK(cell.quality.coverages[f].front_size == expected.coverages[f].front_size);
        CHECK(cell.quality.coverages[f].selected_in_front ==
              expected.coverages[f].selected_in_front);
        CHECK(cell.quality.coverages[f].onvgr == expected.coverages[f].onvgr);
    }
}

TEST_CASE("run_cell conserves the selection size") {
    const DecisionMatrix dataset = small_dataset(23, 50);
    for (const std::size_t k : {1UL, 7UL, 50UL, 80UL}) {
        const ExperimentResult cell = run_cell(dataset, Method::SAW, k, 4, 0.5);
        std::size_t total = 0;
        for (const FrontCoverage& c : cell.quality.coverages) total += c.selected_in_front;
        CHECK(total == std::min<std::size_t>(k, 50));
    }
}

TEST_CASE("run_cell decorates faults with the cell coordinates") {
    const DecisionMatrix dataset = small_dataset(5);
    try {
        run_cell(dataset, Method::VIKOR, 10, 9, 0.5);  // props out of range
        FAIL("expected out_of_range");
    } catch (const std::out_of_range& e) {
        const std::string what = e.what();
        CHECK(what.find("method=vikor") != std::string::npos);
        CHECK(what.find("props=9") != std::string::npos);
    }
}

TEST_CASE("partition cache reuses work and pins its dataset") {
    const DecisionMatrix dataset = small_dataset(31);
    PartitionCache cache;

    const PartitionCache::Entry first = cache.get(dataset, 3);
    const PartitionCache::Entry again = cache.get(dataset, 3);
    CHECK(&first.partition == &again.partition);
    CHECK(again.elapsed_ms == 0.0);

    const PartitionCache::Entry other = cache.get(dataset, 2);
    CHECK(&other.partition != &first.partition);

    const DecisionMatrix different = small_dataset(32);
    CHECK_THROWS_AS(cache.get(different, 3), std::invalid_argument);
}

TEST_CASE("all methods in a cell family see identical fronts") {
    const DecisionMatrix dataset = small_dataset(41);
    PartitionCache cache;
    std::vector<std::vector<std::size_t>> sizes;
    for (const Method method : {Method::SAW, Method::TOPSIS, Method::VIKOR}) {
        const ExperimentResult cell = run_cell(dataset, method, 15, 4, 0.5, cache, 0);
        std::vector<std::size_t> row;
        for (const FrontCoverage& c : cell.quality.coverages) row.push_back(c.front_size);
        sizes.push_back(row);
    }
    // front sizes agree wherever two methods both touched a front
    for (std::size_t a = 1; a < sizes.size(); ++a)
        for (std::size_t f = 0; f < std::min(sizes[0].size(), sizes[a].size()); ++f)
            CHECK(sizes[0][f] == sizes[a][f]);
}

TEST_CASE("run_grid validates its spec up front") {
    TempDir tmp;
    GridSpec spec = tiny_spec();

    spec.methods.clear();
    CHECK_THROWS_AS(run_grid(spec, std::nullopt, tmp.path), std::invalid_argument);

    spec = tiny_spec();
    spec.ks = {0};
    CHECK_THROWS_AS(run_grid(spec, std::nullopt, tmp.path), std::invalid_argument);

    spec = tiny_spec();
    spec.vikor_v = 1.5;
    CHECK_THROWS_AS(run_grid(spec, std::nullopt, tmp.path), std::invalid_argument);

    spec = tiny_spec();
    spec.seeds.clear();
    CHECK_THROWS_AS(run_grid(spec, std::nullopt, tmp.path), std::invalid_argument);
}

TEST_CASE("run_grid faults on an unusable output directory before computing") {
    TempDir tmp;
    const fs::path blocker = tmp.path / "file";
    std::ofstream(blocker) << "x";
    CHECK_THROWS_AS(run_grid(tiny_spec(), std::nullopt, blocker / "sub"), IoError);
}

TEST_CASE("run_grid produces the full cross product and well-formed files") {
    TempDir tmp;
    const GridSpec spec = tiny_spec();
    const std::vector<ExperimentResult> results = run_grid(spec, std::nullopt, tmp.path);

    CHECK(spec.cells_per_seed() == 12);
    REQUIRE(results.size() == 24);

    // every (method, k, props, seed) combination exactly once
    std::map<std::tuple<int, std::size_t, std::size_t, std::uint64_t>, int> seen;
    for (const ExperimentResult& r : results) {
        CHECK(r.n_sensors == 60);
        ++seen[{static_cast<int>(r.method), r.k, r.n_properties, r.seed}];
    }
    CHECK(seen.size() == 24);
    for (const auto& [key, count] : seen) CHECK(count == 1);

    // sorted by (method, k, props, seed)
    for (std::size_t i = 1; i < results.size(); ++i) {
        const auto key = [](const ExperimentResult& r) {
            return std::tuple(static_cast<int>(r.method), r.k, r.n_properties, r.seed);
        };
        CHECK(key(results[i - 1]) < key(results[i]));
    }

    REQUIRE(fs::exists(tmp.path / "results.csv"));
    REQUIRE(fs::exists(tmp.path / "fronts_2.csv"));
    REQUIRE(fs::exists(tmp.path / "fronts_3.csv"));
    REQUIRE(fs::exists(tmp.path / "summary.csv"));

    const std::string results_text = slurp(tmp.path / "results.csv");
    CHECK(results_text.rfind("method,n_sensors,k,n_properties,seed,front,front_size,"
                             "selected_in_front,onvgr,fronts_spanned\n", 0) == 0);

    const std::string fronts_text = slurp(tmp.path / "fronts_2.csv");
    CHECK(fronts_text.rfind("seed,front,size\n", 0) == 0);

    const std::string summary_text = slurp(tmp.path / "summary.csv");
    CHECK(summary_text.rfind("method,k,n_properties,seeds,", 0) == 0);
    // 3 methods x 2 ks x 2 property counts aggregated over seeds
    CHECK(std::count(summary_text.begin(), summary_text.end(), '\n') == 13);
}

TEST_CASE("run_grid output is byte-identical across runs") {
    TempDir a, b;
    run_grid(tiny_spec(), std::nullopt, a.path);
    run_grid(tiny_spec(), std::nullopt, b.path);

    for (const char* name : {"results.csv", "fronts_2.csv", "fronts_3.csv", "summary.csv"}) {
        const std::string left = slurp(a.path / name);
        REQUIRE_FALSE(left.empty());
        CHECK(left == slurp(b.path / name));
    }
}

TEST_CASE("run_grid can pin one dataset file for every seed") {
    TempDir tmp;
    const fs::path csv = tmp.path / "shared.csv";
    save_dataset(small_dataset(77, 50), csv);

    GridSpec spec = tiny_spec();
    spec.seeds = {4, 9};
    const std::vector<ExperimentResult> results = run_grid(spec, csv, tmp.path / "out");

    // same dataset under both seed labels -> identical quality per cell
    std::map<std::tuple<int, std::size_t, std::size_t>,
             std::map<std::uint64_t, std::vector<double>>>
        by_cell;
    for (const ExperimentResult& r : results) {
        std::vector<double> onvgrs;
        for (const FrontCoverage& c : r.quality.coverages) onvgrs.push_back(c.onvgr);
        by_cell[{static_cast<int>(r.method), r.k, r.n_properties}][r.seed] = onvgrs;
    }
    for (auto& [cell, per_seed] : by_cell) {
        REQUIRE(per_seed.size() == 2);
        CHECK(per_seed.at(4) == per_seed.at(9));
        CHECK(per_seed.at(4).size() >= 1);
    }
    for (const ExperimentResult& r : results) CHECK(r.n_sensors == 50);
}

TEST_CASE("emit_plot_data reshapes a grid run") {
    TempDir tmp;
    GridSpec spec = tiny_spec();
    spec.seeds = {3};
    run_grid(spec, std::nullopt, tmp.path);

    const fs::path plots = tmp.path / "plots";
    emit_plot_data(tmp.path / "results.csv", plots);

    for (const std::size_t props : {2UL, 3UL})
        for (const std::size_t k : {5UL, 10UL}) {
            std::ostringstream counts_name, onvgr_name;
            counts_name << "counts_props" << props << "_k" << k << ".csv";
            onvgr_name << "onvgr_props" << props << "_k" << k << ".csv";
            REQUIRE(fs::exists(plots / counts_name.str()));
            REQUIRE(fs::exists(plots / onvgr_name.str()));

            // single seed: per method, selected_in_front sums to k
            std::ifstream counts(plots / counts_name.str());
            std::string line;
            std::getline(counts, line);
            CHECK(line == "front,method,selected_in_front,front_size");
            std::map<std::string, double> selected_sum;
            while (std::getline(counts, line)) {
                std::istringstream row(line);
                std::string front, method, selected, size;
                std::getline(row, front, ',');
                std::getline(row, method, ',');
                std::getline(row, selected, ',');
                std::getline(row, size, ',');
                selected_sum[method] += std::stod(selected);
            }
            REQUIRE(selected_sum.size() == 3);
            for (const auto& [method, total] : selected_sum)
                CHECK(total == doctest::Approx(static_cast<double>(k)));
        }
}

TEST_CASE("emit_plot_data degenerate and malformed inputs") {
    TempDir tmp;

    SUBCASE("header-only results produce no figure files and no fault") {
        const fs::path results = tmp.path / "results.csv";
        std::ofstream(results) << "method,n_sensors,k,n_properties,seed,front,front_size,"
                                  "selected_in_front,onvgr,fronts_spanned\n";
        const fs::path plots = tmp.path / "plots";
        emit_plot_data(results, plots);
        CHECK(fs::exists(plots));
        CHECK(fs::is_empty(plots));
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(emit_plot_data(tmp.path / "nope.csv", tmp.path / "p"), IoError);
    }
    SUBCASE("wrong header") {
        const fs::path results = tmp.path / "results.csv";
        std::ofstream(results) << "method,k\n";
        CHECK_THROWS_AS(emit_plot_data(results, tmp.path / "p"), ParseError);
    }
    SUBCASE("malformed row names its line") {
        const fs::path results = tmp.path / "results.csv";
        std::ofstream(results) << "method,n_sensors,k,n_properties,seed,front,front_size,"
                                  "selected_in_front,onvgr,fronts_spanned\n"
                               << "saw,60,5,2,1,1,12,5,0.4,1\n"
                               << "saw,60,5,2,1,BAD,12,5,0.4,1\n";
        try {
            emit_plot_data(results, tmp.path / "p");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        }
    }
}
