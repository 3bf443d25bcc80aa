#include <chrono>
#include <cstdint>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "mcdakit/datagen.hpp"
#include "mcdakit/pareto.hpp"

using namespace mcdakit;

namespace {

double run_ms(ParetoPartition (*sort)(const DecisionMatrix&), const DecisionMatrix& m,
              ParetoPartition& out) {
    const auto start = std::chrono::steady_clock::now();
    out = sort(m);
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::size_t> sizes = {200, 500, 1000, 2000, 5000};
    std::size_t props = 4;
    std::uint64_t seed = 7;
    std::size_t max_naive = 2000;

    CLI::App app{"compare the parallel front sort against the serial reference"};
    app.add_option("--sizes", sizes, "option counts to benchmark")->delimiter(',');
    app.add_option("--props", props, "criteria per matrix")->check(CLI::Range(2, 6));
    app.add_option("--seed", seed, "dataset seed");
    app.add_option("--max-naive", max_naive,
                   "largest size the quadratic reference still runs at");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP: disabled at build time\n");
#endif
    std::printf("%8s %8s %6s %12s %12s %9s %7s\n", "options", "props", "fronts", "naive_ms",
                "fast_ms", "speedup", "equal");

    for (std::size_t n : sizes) {
        GeneratorConfig config;
        config.n_sensors = n;
        config.seed = seed;
        const DecisionMatrix matrix = project_properties(generate(config), props);

        ParetoPartition fast;
        const double fast_ms = run_ms(fast_non_dominated_sort, matrix, fast);

        if (n <= max_naive) {
            ParetoPartition naive;
            const double naive_ms = run_ms(naive_front_sort, matrix, naive);
            const bool equal = naive.front_of == fast.front_of && naive.fronts == fast.fronts;
            std::printf("%8zu %8zu %6zu %12.2f %12.2f %8.2fx %7s\n", n, props,
                        fast.front_count(), naive_ms, fast_ms, naive_ms / fast_ms,
                        equal ? "yes" : "NO");
            if (!equal) return 1;
        } else {
            std::printf("%8zu %8zu %6zu %12s %12.2f %9s %7s\n", n, props, fast.front_count(),
                        "-", fast_ms, "-", "-");
        }
    }
    return 0;
}
