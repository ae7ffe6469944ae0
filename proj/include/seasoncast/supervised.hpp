#pragma once

#include "seasoncast/grid.hpp"
#include "seasoncast/tensor.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace seasoncast {

/// Identifies one supervised sample: which grid point and which target
/// season-year it predicts.
struct SampleKey {
    std::size_t point = 0; // lat_index * lon_count + lon_index
    Season season = Season::DJF;
    int year = 0;

    bool operator==(const SampleKey&) const = default;
};

/// Flattened per-grid-point regression samples. Features are, per retained
/// variable, its value at the three months of the predictor season
/// (t0 = first month, t1 = second, t2 = third), followed by latitude and
/// longitude in degrees. Targets are seasonal-mean precipitation in mm/day.
struct SupervisedSet {
    std::vector<std::string> feature_names;
    Matrix features;
    std::vector<double> targets;
    std::vector<SampleKey> keys;

    std::size_t sample_count() const { return targets.size(); }
    std::size_t feature_count() const { return feature_names.size(); }
};

/// Builds the (train_val, test) pair for one target season. The test set
/// holds exactly the samples whose target season falls in `test_year`;
/// train_val holds all earlier season-years. Feature lags are read from the
/// season immediately preceding the target season (DJF targets read SON of
/// the previous year).
///
/// Throws UnknownVariable for a retained name missing from the series and
/// InsufficientHistory when either side would be empty.
std::pair<SupervisedSet, SupervisedSet> assemble_supervised(const GridSeries& series,
                                                            Season target_season,
                                                            const std::vector<std::string>& retained_vars,
                                                            int test_year);

/// Seeded shuffled partition: |train| = floor(train_fraction * N), the rest
/// is validation. Throws EmptySet / BadFraction.
std::pair<SupervisedSet, SupervisedSet> holdout_split(const SupervisedSet& set, double train_fraction,
                                                      std::uint64_t seed);

/// Row subset by sample index, preserving order.
SupervisedSet subset(const SupervisedSet& set, const std::vector<std::size_t>& indices);

} // namespace seasoncast
