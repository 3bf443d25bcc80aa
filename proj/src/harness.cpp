#include "mcdakit/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>

#include "mcdakit/errors.hpp"
#include "mcdakit/util.hpp"

namespace mcdakit {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <typename Fn>
auto with_cell_context(const std::string& context, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const IoError& e) {
        throw IoError(context + e.what());
    } catch (const ParseError& e) {
        throw ParseError(context + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(context + e.what());
    } catch (const std::out_of_range& e) {
        throw std::out_of_range(context + e.what());
    }
}

std::string cell_context(Method method, std::size_t k, std::size_t n_properties,
                         std::uint64_t seed) {
    std::ostringstream ctx;
    ctx << "cell method=" << to_string(method) << " k=" << k << " props=" << n_properties
        << " seed=" << seed << ": ";
    return ctx.str();
}

void ensure_writable_dir(const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + out_dir.string());
    const std::filesystem::path probe = out_dir / ".write_probe";
    {
        std::ofstream f(probe);
        if (!f) throw IoError("output directory is not writable: " + out_dir.string());
    }
    std::filesystem::remove(probe, ec);
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open for writing: " + path.string());
    return f;
}

void finish_output(std::ofstream& f, const std::filesystem::path& path) {
    f.flush();
    if (!f) throw IoError("write failed: " + path.string());
}

double mean_of(const std::vector<double>& xs) {
    double sum = 0.0;
    for (double x : xs) sum += x;
    return sum / static_cast<double>(xs.size());
}

// Population standard deviation: well defined for a single seed (0).
double stddev_of(const std::vector<double>& xs, double mean) {
    double sum = 0.0;
    for (double x : xs) sum += (x - mean) * (x - mean);
    return std::sqrt(sum / static_cast<double>(xs.size()));
}

} // namespace

PartitionCache::Entry PartitionCache::get(const DecisionMatrix& matrix,
                                          std::size_t n_properties) {
    if (matrix_ == nullptr) {
        matrix_ = &matrix;
    } else if (matrix_ != &matrix) {
        throw std::invalid_argument("PartitionCache: cache is bound to a different dataset");
    }

    if (auto it = partitions_.find(n_properties); it != partitions_.end())
        return Entry{it->second, 0.0};

    const auto start = Clock::now();
    ParetoPartition partition = fast_non_dominated_sort(project_properties(matrix, n_properties));
    const double elapsed = ms_since(start);
    auto [it, inserted] = partitions_.emplace(n_properties, std::move(partition));
    (void)inserted;
    return Entry{it->second, elapsed};
}

ExperimentResult run_cell(const DecisionMatrix& matrix, Method method, std::size_t k,
                          std::size_t n_properties, double vikor_v, PartitionCache& cache,
                          std::uint64_t seed_label) {
    const std::string context = cell_context(method, k, n_properties, seed_label);
    return with_cell_context(context, [&] {
        ExperimentResult result;
        result.method = method;
        result.n_sensors = matrix.option_count();
        result.k = k;
        result.n_properties = n_properties;
        result.seed = seed_label;

        auto start = Clock::now();
        const DecisionMatrix projected = project_properties(matrix, n_properties);
        const Ranking ranking = rank_matrix(projected, method, VikorParams{vikor_v});
        const Selection selection = top_k(ranking, k);
        result.times.rank_ms = ms_since(start);

        const PartitionCache::Entry entry = cache.get(matrix, n_properties);
        result.times.sort_ms = entry.elapsed_ms;

        start = Clock::now();
        result.quality = evaluate_selection(selection, entry.partition);
        result.times.eval_ms = ms_since(start);
        return result;
    });
}

ExperimentResult run_cell(const DecisionMatrix& matrix, Method method, std::size_t k,
                          std::size_t n_properties, double vikor_v) {
    PartitionCache cache;
    return run_cell(matrix, method, k, n_properties, vikor_v, cache, 0);
}

std::vector<ExperimentResult> run_grid(const GridSpec& spec,
                                       const std::optional<std::filesystem::path>& dataset_csv,
                                       const std::filesystem::path& out_dir) {
    if (spec.n_sensors == 0) throw std::invalid_argument("run_grid: n_sensors must be at least 1");
    if (spec.methods.empty()) throw std::invalid_argument("run_grid: no methods");
    if (spec.ks.empty()) throw std::invalid_argument("run_grid: no ks");
    if (spec.property_counts.empty()) throw std::invalid_argument("run_grid: no property counts");
    if (spec.seeds.empty()) throw std::invalid_argument("run_grid: no seeds");
    for (std::size_t k : spec.ks)
        if (k == 0) throw std::invalid_argument("run_grid: k must be at least 1");
    if (!(spec.vikor_v >= 0.0 && spec.vikor_v <= 1.0))
        throw std::invalid_argument("run_grid: v must lie in [0, 1]");

    ensure_writable_dir(out_dir);

    std::optional<DecisionMatrix> shared;
    if (dataset_csv) shared = load_dataset(*dataset_csv);

    std::vector<ExperimentResult> results;
    results.reserve(spec.cells_per_seed() * spec.seeds.size());
    // (n_properties -> (seed, front, size)), for fronts_<p>.csv
    std::map<std::size_t, std::vector<std::tuple<std::uint64_t, std::size_t, std::size_t>>>
        front_tables;

    for (std::uint64_t seed : spec.seeds) {
        std::optional<DecisionMatrix> generated;
        if (!shared) {
            GeneratorConfig config;
            config.n_sensors = spec.n_sensors;
            config.seed = seed;
            generated = generate(config);
        }
        const DecisionMatrix& dataset = shared ? *shared : *generated;

        PartitionCache cache;
        for (std::size_t props : spec.property_counts) {
            for (Method method : spec.methods)
                for (std::size_t k : spec.ks)
                    results.push_back(
                        run_cell(dataset, method, k, props, spec.vikor_v, cache, seed));

            const ParetoPartition& partition = cache.get(dataset, props).partition;
            auto& table = front_tables[props];
            for (std::size_t f = 0; f < partition.front_count(); ++f)
                table.emplace_back(seed, f + 1, partition.front_sizes[f]);
        }
    }

    std::stable_sort(results.begin(), results.end(),
                     [](const ExperimentResult& a, const ExperimentResult& b) {
                         return std::tuple(static_cast<int>(a.method), a.k, a.n_properties,
                                           a.seed) <
                                std::tuple(static_cast<int>(b.method), b.k, b.n_properties,
                                           b.seed);
                     });

    {
        const std::filesystem::path path = out_dir / "results.csv";
        std::ofstream f = open_output(path);
        f << "method,n_sensors,k,n_properties,seed,front,front_size,selected_in_front,onvgr,"
             "fronts_spanned\n";
        for (const ExperimentResult& r : results) {
            for (const FrontCoverage& c : r.quality.coverages) {
                f << to_string(r.method) << ',' << r.n_sensors << ',' << r.k << ','
                  << r.n_properties << ',' << r.seed << ',' << c.front_index << ','
                  << c.front_size << ',' << c.selected_in_front << ','
                  << format_double(c.onvgr) << ',' << r.quality.fronts_spanned << '\n';
            }
        }
        finish_output(f, path);
    }

    for (auto& [props, table] : front_tables) {
        std::sort(table.begin(), table.end());
        const std::filesystem::path path = out_dir / ("fronts_" + std::to_string(props) + ".csv");
        std::ofstream f = open_output(path);
        f << "seed,front,size\n";
        for (const auto& [seed, front, size] : table)
            f << seed << ',' << front << ',' << size << '\n';
        finish_output(f, path);
    }

    {
        // cell key (method, k, props) -> per-seed front-1 onvgr and spanned
        std::map<std::tuple<int, std::size_t, std::size_t>,
                 std::pair<std::vector<double>, std::vector<double>>>
            cells;
        for (const ExperimentResult& r : results) {
            auto& [onvgr1, spanned] = cells[{static_cast<int>(r.method), r.k, r.n_properties}];
            onvgr1.push_back(r.quality.coverages.front().onvgr);
            spanned.push_back(static_cast<double>(r.quality.fronts_spanned));
        }

        const std::filesystem::path path = out_dir / "summary.csv";
        std::ofstream f = open_output(path);
        f << "method,k,n_properties,seeds,front1_onvgr_mean,front1_onvgr_stddev,"
             "fronts_spanned_mean,fronts_spanned_stddev\n";
        for (const auto& [key, data] : cells) {
            const auto& [method_int, k, props] = key;
            const auto& [onvgr1, spanned] = data;
            const double om = mean_of(onvgr1);
            const double sm = mean_of(spanned);
            f << to_string(static_cast<Method>(method_int)) << ',' << k << ',' << props << ','
              << onvgr1.size() << ',' << format_double(om) << ','
              << format_double(stddev_of(onvgr1, om)) << ',' << format_double(sm) << ','
              << format_double(stddev_of(spanned, sm)) << '\n';
        }
        finish_output(f, path);
    }

    return results;
}

namespace {

struct ResultRow {
    Method method = Method::SAW;
    std::size_t k = 0;
    std::size_t n_properties = 0;
    std::uint64_t seed = 0;
    std::size_t front = 0;
    std::size_t front_size = 0;
    std::size_t selected_in_front = 0;
    double onvgr = 0.0;
};

[[noreturn]] void results_fail(const std::filesystem::path& file, std::size_t line,
                               const std::string& what) {
    std::ostringstream msg;
    msg << file.string() << ": line " << line << ": " << what;
    throw ParseError(msg.str());
}

std::vector<ResultRow> load_results(const std::filesystem::path& results_csv) {
    std::ifstream in(results_csv);
    if (!in) throw IoError("cannot open results file: " + results_csv.string());

    static const std::string expected_header =
        "method,n_sensors,k,n_properties,seed,front,front_size,selected_in_front,onvgr,"
        "fronts_spanned";

    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&](std::string& out) {
        while (std::getline(in, out)) {
            ++line_no;
            if (!out.empty() && out.back() == '\r') out.pop_back();
            if (!out.empty()) return true;
        }
        return false;
    };

    if (!next_line(line)) results_fail(results_csv, 1, "empty file");
    if (line != expected_header)
        results_fail(results_csv, line_no, "unexpected header: '" + line + "'");

    std::vector<ResultRow> rows;
    while (next_line(line)) {
        const std::vector<std::string_view> fields = split_csv_line(line);
        if (fields.size() != 10) {
            std::ostringstream what;
            what << "expected 10 fields, got " << fields.size();
            results_fail(results_csv, line_no, what.str());
        }

        ResultRow row;
        const auto method = method_from_string(std::string(fields[0]));
        if (!method)
            results_fail(results_csv, line_no, "unknown method '" + std::string(fields[0]) + "'");
        row.method = *method;

        auto uint_field = [&](std::size_t index) {
            const auto parsed = parse_uint(fields[index]);
            if (!parsed)
                results_fail(results_csv, line_no,
                             "not an unsigned integer: '" + std::string(fields[index]) + "'");
            return *parsed;
        };
        uint_field(1);  // n_sensors: validated, unused here
        row.k = static_cast<std::size_t>(uint_field(2));
        row.n_properties = static_cast<std::size_t>(uint_field(3));
        row.seed = uint_field(4);
        row.front = static_cast<std::size_t>(uint_field(5));
        row.front_size = static_cast<std::size_t>(uint_field(6));
        row.selected_in_front = static_cast<std::size_t>(uint_field(7));
        const auto onvgr = parse_double(fields[8]);
        if (!onvgr)
            results_fail(results_csv, line_no, "not a number: '" + std::string(fields[8]) + "'");
        row.onvgr = *onvgr;
        uint_field(9);  // fronts_spanned: validated, unused here
        if (row.front == 0) results_fail(results_csv, line_no, "front index must be >= 1");
        rows.push_back(row);
    }
    return rows;
}

} // namespace

void emit_plot_data(const std::filesystem::path& results_csv,
                    const std::filesystem::path& out_dir) {
    const std::vector<ResultRow> rows = load_results(results_csv);
    ensure_writable_dir(out_dir);

    // Front sizes are a property of (n_properties, seed, front), independent
    // of method and k; remember one observation each for fill-in below.
    std::map<std::tuple<std::size_t, std::uint64_t, std::size_t>, std::size_t> size_of;
    for (const ResultRow& r : rows) size_of.emplace(std::tuple(r.n_properties, r.seed, r.front), r.front_size);

    std::map<std::tuple<std::size_t, std::size_t>, std::vector<const ResultRow*>> groups;
    for (const ResultRow& r : rows) groups[{r.n_properties, r.k}].push_back(&r);

    for (const auto& [key, group] : groups) {
        const auto& [props, k] = key;

        std::set<int> methods;
        std::set<std::uint64_t> seeds;
        std::size_t max_front = 0;
        std::map<std::tuple<std::size_t, int, std::uint64_t>, const ResultRow*> by_cell;
        for (const ResultRow* r : group) {
            methods.insert(static_cast<int>(r->method));
            seeds.insert(r->seed);
            max_front = std::max(max_front, r->front);
            by_cell[{r->front, static_cast<int>(r->method), r->seed}] = r;
        }

        std::ostringstream suffix;
        suffix << "_props" << props << "_k" << k << ".csv";
        const std::filesystem::path counts_path = out_dir / ("counts" + suffix.str());
        const std::filesystem::path onvgr_path = out_dir / ("onvgr" + suffix.str());
        std::ofstream counts = open_output(counts_path);
        std::ofstream onvgr = open_output(onvgr_path);
        counts << "front,method,selected_in_front,front_size\n";
        onvgr << "front,method,onvgr\n";

        for (std::size_t front = 1; front <= max_front; ++front) {
            for (int method : methods) {
                // Seeds where a method never reached this front contribute
                // zero coverage; their front size, when never observed at
                // all, drops out of the size average.
                double selected_sum = 0.0;
                double onvgr_sum = 0.0;
                double size_sum = 0.0;
                std::size_t size_count = 0;
                for (std::uint64_t seed : seeds) {
                    if (auto it = by_cell.find({front, method, seed}); it != by_cell.end()) {
                        selected_sum += static_cast<double>(it->second->selected_in_front);
                        onvgr_sum += it->second->onvgr;
                    }
                    if (auto it = size_of.find({props, seed, front}); it != size_of.end()) {
                        size_sum += static_cast<double>(it->second);
                        ++size_count;
                    }
                }
                const double n_seeds = static_cast<double>(seeds.size());
                counts << front << ',' << to_string(static_cast<Method>(method)) << ','
                       << format_double(selected_sum / n_seeds) << ','
                       << format_double(size_count > 0 ? size_sum / static_cast<double>(size_count)
                                                       : 0.0)
                       << '\n';
                onvgr << front << ',' << to_string(static_cast<Method>(method)) << ','
                      << format_double(onvgr_sum / n_seeds) << '\n';
            }
        }
        finish_output(counts, counts_path);
        finish_output(onvgr, onvgr_path);
    }
}

} // namespace mcdakit
