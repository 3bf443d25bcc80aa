#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcdakit/datagen.hpp"
#include "mcdakit/errors.hpp"
#include "mcdakit/harness.hpp"
#include "mcdakit/mcda.hpp"
#include "mcdakit/metrics.hpp"
#include "mcdakit/pareto.hpp"
#include "mcdakit/util.hpp"

namespace {

using namespace mcdakit;

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open for writing: " + path.string());
    return f;
}

void finish_output(std::ofstream& f, const std::filesystem::path& path) {
    f.flush();
    if (!f) throw IoError("write failed: " + path.string());
}

Method parse_method(const std::string& name) {
    const auto method = method_from_string(name);
    if (!method)
        throw std::invalid_argument("unknown method '" + name + "' (expected saw|topsis|vikor)");
    return *method;
}

void run_gen(std::size_t n, std::uint64_t seed, const std::filesystem::path& out) {
    GeneratorConfig config;
    config.n_sensors = n;
    config.seed = seed;
    save_dataset(generate(config), out);
}

void run_rank(const std::filesystem::path& data, const std::string& method_name,
              std::size_t props, double v, const std::vector<double>& weights,
              const std::filesystem::path& out) {
    const Method method = parse_method(method_name);
    DecisionMatrix matrix = project_properties(load_dataset(data), props);
    if (!weights.empty()) {
        if (weights.size() != props)
            throw std::invalid_argument("--weights needs exactly " + std::to_string(props) +
                                        " values, got " + std::to_string(weights.size()));
        matrix = matrix.with_weights(weights);
    }

    const Ranking ranking = rank_matrix(matrix, method, VikorParams{v});
    std::ofstream f = open_output(out);
    f << "rank,option_id,score\n";
    for (std::size_t r = 0; r < ranking.order.size(); ++r) {
        const std::size_t option = ranking.order[r];
        f << r + 1 << ',' << matrix.option_ids()[option] << ','
          << format_double(ranking.scores[option]) << '\n';
    }
    finish_output(f, out);
}

void run_pareto(const std::filesystem::path& data, std::size_t props,
                const std::filesystem::path& out) {
    const DecisionMatrix matrix = project_properties(load_dataset(data), props);
    const ParetoPartition partition = fast_non_dominated_sort(matrix);
    std::ofstream f = open_output(out);
    f << "option_id,front\n";
    for (std::size_t i = 0; i < matrix.option_count(); ++i)
        f << matrix.option_ids()[i] << ',' << partition.front_of[i] << '\n';
    finish_output(f, out);
}

std::vector<std::string_view> data_line_fields(const std::filesystem::path& file,
                                               const std::string& line, std::size_t line_no,
                                               std::size_t expected) {
    const std::vector<std::string_view> fields = split_csv_line(line);
    if (fields.size() != expected) {
        throw ParseError(file.string() + ": line " + std::to_string(line_no) + ": expected " +
                         std::to_string(expected) + " fields, got " +
                         std::to_string(fields.size()));
    }
    return fields;
}

void run_eval(const std::filesystem::path& ranking_path,
              const std::filesystem::path& partition_path, std::size_t k,
              const std::filesystem::path& out) {
    // Partition file: option universe + front per option, in file order.
    std::ifstream pf(partition_path);
    if (!pf) throw IoError("cannot open partition file: " + partition_path.string());
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&](std::ifstream& in, std::string& text) {
        while (std::getline(in, text)) {
            ++line_no;
            if (!text.empty() && text.back() == '\r') text.pop_back();
            if (!text.empty()) return true;
        }
        return false;
    };

    if (!next_line(pf, line) || line != "option_id,front")
        throw ParseError(partition_path.string() + ": expected header 'option_id,front'");
    std::map<std::string, std::size_t, std::less<>> index_of;
    ParetoPartition partition;
    while (next_line(pf, line)) {
        const auto fields = data_line_fields(partition_path, line, line_no, 2);
        const auto front = parse_uint(fields[1]);
        if (!front || *front == 0)
            throw ParseError(partition_path.string() + ": line " + std::to_string(line_no) +
                             ": front must be a positive integer, got '" +
                             std::string(fields[1]) + "'");
        const auto [it, inserted] = index_of.emplace(fields[0], partition.front_of.size());
        if (!inserted)
            throw ParseError(partition_path.string() + ": line " + std::to_string(line_no) +
                             ": duplicate option id '" + std::string(fields[0]) + "'");
        partition.front_of.push_back(static_cast<std::size_t>(*front));
    }
    if (partition.front_of.empty())
        throw ParseError(partition_path.string() + ": no data rows");

    std::size_t max_front = 0;
    for (std::size_t f : partition.front_of) max_front = std::max(max_front, f);
    partition.fronts.assign(max_front, {});
    for (std::size_t i = 0; i < partition.front_of.size(); ++i)
        partition.fronts[partition.front_of[i] - 1].push_back(i);
    for (std::size_t f = 0; f < max_front; ++f) {
        if (partition.fronts[f].empty())
            throw ParseError(partition_path.string() + ": front " + std::to_string(f + 1) +
                             " is empty; fronts must be contiguous");
        partition.front_sizes.push_back(partition.fronts[f].size());
    }

    // Ranking file: ordered option ids; the selection is the first k.
    std::ifstream rf(ranking_path);
    if (!rf) throw IoError("cannot open ranking file: " + ranking_path.string());
    line_no = 0;
    if (!next_line(rf, line) || line != "rank,option_id,score")
        throw ParseError(ranking_path.string() + ": expected header 'rank,option_id,score'");
    std::vector<std::pair<unsigned long long, std::string>> ranked;
    while (next_line(rf, line)) {
        const auto fields = data_line_fields(ranking_path, line, line_no, 3);
        const auto rank = parse_uint(fields[0]);
        if (!rank)
            throw ParseError(ranking_path.string() + ": line " + std::to_string(line_no) +
                             ": not an unsigned integer: '" + std::string(fields[0]) + "'");
        if (!parse_double(fields[2]))
            throw ParseError(ranking_path.string() + ": line " + std::to_string(line_no) +
                             ": not a number: '" + std::string(fields[2]) + "'");
        ranked.emplace_back(*rank, std::string(fields[1]));
    }
    if (ranked.empty()) throw ParseError(ranking_path.string() + ": no data rows");
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    Selection selection;
    selection.k = k;
    for (const auto& [rank, id] : ranked) {
        if (selection.indices.size() == k) break;
        const auto it = index_of.find(id);
        if (it == index_of.end())
            throw std::invalid_argument("ranking option id '" + id +
                                        "' is not present in the partition");
        selection.indices.push_back(it->second);
    }

    const SelectionQuality quality = evaluate_selection(selection, partition);
    std::ofstream f = open_output(out);
    f << "front,front_size,selected_in_front,onvgr,fronts_spanned\n";
    for (const FrontCoverage& c : quality.coverages)
        f << c.front_index << ',' << c.front_size << ',' << c.selected_in_front << ','
          << format_double(c.onvgr) << ',' << quality.fronts_spanned << '\n';
    finish_output(f, out);
}

void run_grid_cmd(const GridSpec& spec, const std::filesystem::path& out_dir) {
    const std::vector<ExperimentResult> results = run_grid(spec, std::nullopt, out_dir);

    double rank_ms = 0.0, sort_ms = 0.0, eval_ms = 0.0;
    for (const ExperimentResult& r : results) {
        rank_ms += r.times.rank_ms;
        sort_ms += r.times.sort_ms;
        eval_ms += r.times.eval_ms;
    }
    std::cout << "cells: " << results.size() << " (" << spec.cells_per_seed() << " per seed x "
              << spec.seeds.size() << " seeds)\n"
              << "stage wall times: rank " << rank_ms << " ms, front sort " << sort_ms
              << " ms, eval " << eval_ms << " ms\n"
              << "wrote results.csv, fronts_<p>.csv, summary.csv under " << out_dir.string()
              << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"MCDA sensor-selection toolkit: SAW/TOPSIS/VIKOR ranking, Pareto front "
                 "sorting, selection-quality metrics, and the experiment grid"};
    app.require_subcommand(1);

    std::size_t gen_n = 1;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    CLI::App* gen = app.add_subcommand("gen", "generate a synthetic sensor dataset");
    gen->add_option("--n", gen_n, "number of sensors")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", gen_seed, "generator seed")->required();
    gen->add_option("--out", gen_out, "dataset CSV path (descriptor written alongside)")
        ->required();

    std::string rank_data, rank_method, rank_out;
    std::size_t rank_props = 6;
    double rank_v = 0.5;
    std::vector<double> rank_weights;
    CLI::App* rank = app.add_subcommand("rank", "rank a dataset with one MCDA method");
    rank->add_option("--data", rank_data, "dataset CSV path")->required();
    rank->add_option("--method", rank_method, "saw|topsis|vikor")->required();
    rank->add_option("--props", rank_props, "number of leading properties to use")
        ->required()
        ->check(CLI::Range(2, 6));
    rank->add_option("--v", rank_v, "VIKOR majority weight")->check(CLI::Range(0.0, 1.0));
    rank->add_option("--weights", rank_weights, "per-criterion weights w1,..,wk")
        ->delimiter(',');
    rank->add_option("--out", rank_out, "ranking CSV path")->required();

    std::string pareto_data, pareto_out;
    std::size_t pareto_props = 6;
    CLI::App* pareto = app.add_subcommand("pareto", "sort a dataset into Pareto fronts");
    pareto->add_option("--data", pareto_data, "dataset CSV path")->required();
    pareto->add_option("--props", pareto_props, "number of leading properties to use")
        ->required()
        ->check(CLI::Range(2, 6));
    pareto->add_option("--out", pareto_out, "partition CSV path")->required();

    std::string eval_ranking, eval_partition, eval_out;
    std::size_t eval_k = 1;
    CLI::App* eval = app.add_subcommand("eval", "score a top-k selection against a partition");
    eval->add_option("--ranking", eval_ranking, "ranking CSV path")->required();
    eval->add_option("--partition", eval_partition, "partition CSV path")->required();
    eval->add_option("--k", eval_k, "selection size")->required()->check(CLI::PositiveNumber);
    eval->add_option("--out", eval_out, "selection-quality CSV path")->required();

    GridSpec spec;
    std::vector<std::string> grid_methods = {"saw", "topsis", "vikor"};
    std::string grid_out;
    CLI::App* grid = app.add_subcommand("grid", "run the full experiment grid");
    grid->add_option("--n", spec.n_sensors, "number of sensors per dataset")
        ->check(CLI::PositiveNumber);
    grid->add_option("--ks", spec.ks, "selection sizes k1,k2,..")->delimiter(',');
    grid->add_option("--props", spec.property_counts, "property counts p1,p2,..")
        ->delimiter(',')
        ->check(CLI::Range(2, 6));
    grid->add_option("--methods", grid_methods, "methods m1,m2,..")->delimiter(',');
    grid->add_option("--seeds", spec.seeds, "dataset seeds s1,s2,..")->delimiter(',');
    grid->add_option("--v", spec.vikor_v, "VIKOR majority weight")->check(CLI::Range(0.0, 1.0));
    grid->add_option("--out", grid_out, "output directory")->required();

    std::string plot_results, plot_out;
    CLI::App* plotdata = app.add_subcommand("plotdata", "reshape grid results into figure data");
    plotdata->add_option("--results", plot_results, "results.csv path")->required();
    plotdata->add_option("--out", plot_out, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (gen->parsed()) {
            run_gen(gen_n, gen_seed, gen_out);
        } else if (rank->parsed()) {
            run_rank(rank_data, rank_method, rank_props, rank_v, rank_weights, rank_out);
        } else if (pareto->parsed()) {
            run_pareto(pareto_data, pareto_props, pareto_out);
        } else if (eval->parsed()) {
            run_eval(eval_ranking, eval_partition, eval_k, eval_out);
        } else if (grid->parsed()) {
            spec.methods.clear();
            for (const std::string& name : grid_methods) spec.methods.push_back(parse_method(name));
            run_grid_cmd(spec, grid_out);
        } else if (plotdata->parsed()) {
            emit_plot_data(plot_results, plot_out);
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
