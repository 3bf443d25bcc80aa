#include "mcdakit/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcdakit {

std::vector<std::size_t> SelectionQuality::per_front_selected_counts() const {
    std::vector<std::size_t> counts;
    counts.reserve(coverages.size());
    for (const FrontCoverage& c : coverages) counts.push_back(c.selected_in_front);
    return counts;
}

SelectionQuality evaluate_selection(const Selection& selection,
                                    const ParetoPartition& partition) {
    if (selection.indices.empty())
        throw std::invalid_argument("evaluate_selection: selection is empty");

    const std::size_t options = partition.front_of.size();
    std::vector<std::size_t> selected_per_front(partition.front_count(), 0);
    std::size_t deepest = 0;
    for (std::size_t option : selection.indices) {
        if (option >= options)
            throw std::invalid_argument("evaluate_selection: selected index out of range");
        const std::size_t front = partition.front_of[option];
        ++selected_per_front[front - 1];
        deepest = std::max(deepest, front);
    }

    SelectionQuality quality;
    quality.fronts_spanned = deepest;
    quality.coverages.reserve(deepest);
    for (std::size_t f = 1; f <= deepest; ++f) {
        FrontCoverage coverage;
        coverage.front_index = f;
        coverage.front_size = partition.front_sizes[f - 1];
        coverage.selected_in_front = selected_per_front[f - 1];
        coverage.onvgr = static_cast<double>(coverage.selected_in_front) /
                         static_cast<double>(coverage.front_size);
        quality.coverages.push_back(coverage);
    }
    return quality;
}

} // namespace mcdakit
