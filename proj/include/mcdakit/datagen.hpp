#ifndef MCDAKIT_DATAGEN_HPP
#define MCDAKIT_DATAGEN_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "mcdakit/model.hpp"

namespace mcdakit {

/// Sampling range for one synthetic sensor attribute.
struct AttributeRange {
    std::string name;
    Direction direction = Direction::Maximize;
    double low = 0.0;
    double high = 1.0;
    std::string unit;  // documentation only
};

/// The six canonical attributes, in the fixed column order used everywhere:
/// battery, price, drift, frequency, energy_consumption, response_time.
const std::vector<AttributeRange>& canonical_attributes();

/// Configuration of the synthetic dataset generator.
struct GeneratorConfig {
    std::size_t n_sensors = 1;
    std::uint64_t seed = 0;
    std::vector<AttributeRange> attributes = canonical_attributes();
};

/// Draws an n_sensors x attributes matrix, each cell independently uniform
/// over its attribute's [low, high]. The stream is xoshiro256++ seeded via
/// SplitMix64 (see rng.hpp) consumed row by row, attribute by attribute, so
/// the output is a pure function of the config and identical across
/// platforms. Criterion weights are equal (1/N). Option ids are "s000000",
/// "s000001", ... zero-padded to six digits.
DecisionMatrix generate(const GeneratorConfig& config);

/// Sub-matrix of the first n_properties columns, preserving option ids and
/// criterion specs. Throws std::out_of_range unless 2 <= n_properties <=
/// column count.
DecisionMatrix project_properties(const DecisionMatrix& matrix, std::size_t n_properties);

/// Sidecar descriptor path for a dataset CSV: the same path with its
/// extension replaced by ".json".
std::filesystem::path descriptor_path_for(const std::filesystem::path& csv_path);

/// Writes the dataset as CSV (header "id,<criterion>,..."; one row per
/// option; round-trip double formatting) plus the JSON sidecar carrying
/// name/direction/weight per criterion in column order.
void save_dataset(const DecisionMatrix& matrix, const std::filesystem::path& csv_path);

/// Reads a dataset written by save_dataset. load(save(m)) reproduces m
/// cell-exactly. Throws IoError when a file cannot be opened (the message
/// names the expected descriptor path when the sidecar is missing) and
/// ParseError with row/column positions for malformed content, including a
/// header/descriptor criterion-name mismatch.
DecisionMatrix load_dataset(const std::filesystem::path& csv_path);

} // namespace mcdakit

#endif
