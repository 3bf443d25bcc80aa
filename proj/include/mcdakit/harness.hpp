#ifndef MCDAKIT_HARNESS_HPP
#define MCDAKIT_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <vector>

#include "mcdakit/datagen.hpp"
#include "mcdakit/mcda.hpp"
#include "mcdakit/metrics.hpp"
#include "mcdakit/model.hpp"
#include "mcdakit/pareto.hpp"

namespace mcdakit {

/// One experiment grid: the cross product of methods x ks x property counts,
/// run once per seed over a dataset of n_sensors options.
struct GridSpec {
    std::size_t n_sensors = 10'000;
    std::vector<Method> methods = {Method::SAW, Method::TOPSIS, Method::VIKOR};
    std::vector<std::size_t> ks = {100, 500, 1'000};
    std::vector<std::size_t> property_counts = {2, 3, 4, 5, 6};
    std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    double vikor_v = 0.5;

    std::size_t cells_per_seed() const {
        return methods.size() * ks.size() * property_counts.size();
    }
};

struct StageTimes {
    double rank_ms = 0.0;
    double sort_ms = 0.0;  // 0 when the partition came from the cache
    double eval_ms = 0.0;
};

/// One grid cell's coordinates, selection quality, and stage wall times.
struct ExperimentResult {
    Method method = Method::SAW;
    std::size_t n_sensors = 0;
    std::size_t k = 0;
    std::size_t n_properties = 0;
    std::uint64_t seed = 0;
    SelectionQuality quality;
    StageTimes times;
};

/// Caches the Pareto partition of the projected dataset per property count,
/// so every method in a cell family evaluates against identical fronts. One
/// cache serves exactly one dataset; feeding it a different matrix throws.
class PartitionCache {
public:
    struct Entry {
        const ParetoPartition& partition;
        double elapsed_ms;  // 0 on a cache hit
    };

    Entry get(const DecisionMatrix& matrix, std::size_t n_properties);

private:
    const DecisionMatrix* matrix_ = nullptr;
    std::map<std::size_t, ParetoPartition> partitions_;
};

/// Projects the matrix to n_properties columns, ranks it with the method,
/// selects the top k, fetches the partition of the projected full dataset
/// from the cache, and evaluates the selection. Faults from any stage are
/// rethrown with the cell coordinates attached.
ExperimentResult run_cell(const DecisionMatrix& matrix, Method method, std::size_t k,
                          std::size_t n_properties, double vikor_v, PartitionCache& cache,
                          std::uint64_t seed_label = 0);

/// Single-cell convenience overload with a private cache.
ExperimentResult run_cell(const DecisionMatrix& matrix, Method method, std::size_t k,
                          std::size_t n_properties, double vikor_v = 0.5);

/// Runs every grid cell for every seed and writes, under out_dir:
///   results.csv   method,n_sensors,k,n_properties,seed,front,front_size,
///                 selected_in_front,onvgr,fronts_spanned (one row per front)
///   fronts_<p>.csv  seed,front,size for the full partition per property count
///   summary.csv   per-cell mean/stddev of front-1 onvgr and fronts_spanned
///                 across seeds
/// Rows are sorted by (method, k, n_properties, seed, front), so the files
/// are byte-stable for a given spec. The dataset is generated per seed
/// unless dataset_csv is given, in which case that one dataset is used for
/// every seed. An unusable out_dir faults before any computation.
std::vector<ExperimentResult> run_grid(const GridSpec& spec,
                                       const std::optional<std::filesystem::path>& dataset_csv,
                                       const std::filesystem::path& out_dir);

/// Reshapes results.csv into per-figure files, one pair per (n_properties,
/// k): counts_props<p>_k<k>.csv with front,method,selected_in_front,
/// front_size and onvgr_props<p>_k<k>.csv with front,method,onvgr. Values
/// are averaged across seeds when the results hold more than one.
void emit_plot_data(const std::filesystem::path& results_csv,
                    const std::filesystem::path& out_dir);

} // namespace mcdakit

#endif
