#ifndef MCDAKIT_METRICS_HPP
#define MCDAKIT_METRICS_HPP

#include <cstddef>
#include <vector>

#include "mcdakit/model.hpp"
#include "mcdakit/pareto.hpp"

namespace mcdakit {

/// How much of one Pareto front a selection covers.
/// onvgr = selected_in_front / front_size, in [0, 1].
struct FrontCoverage {
    std::size_t front_index = 0;  // 1-based
    std::size_t front_size = 0;
    std::size_t selected_in_front = 0;
    double onvgr = 0.0;
};

/// Coverage of every front from 1 up to the deepest front touched by the
/// selection (fronts_spanned). Intermediate fronts with no selected option
/// appear with onvgr 0. Selected counts sum to the selection size.
struct SelectionQuality {
    std::vector<FrontCoverage> coverages;
    std::size_t fronts_spanned = 0;

    std::vector<std::size_t> per_front_selected_counts() const;
};

/// Intersects the selection with each front of the partition. Throws
/// std::invalid_argument for an empty selection or out-of-range indices.
SelectionQuality evaluate_selection(const Selection& selection,
                                    const ParetoPartition& partition);

} // namespace mcdakit

#endif
